#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "surfcohom/int_matrix.hpp"

namespace surfcohom {

/// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_r,
/// all d_i > 0, zeros after position rank. Inverses of U and V are tracked
/// alongside so kernels and lifts need no further inversion.
struct SmithDecomposition {
    IntMatrix U, S, V;
    IntMatrix U_inv, V_inv;
    std::size_t rank = 0;

    BigInt diagonal(std::size_t i) const {
        return i < std::min(S.rows(), S.cols()) ? S(i, i) : BigInt(0);
    }
};

namespace detail {

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
inline std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& s,
                                                                     std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_val;
    for (std::size_t r = t; r < s.rows(); ++r)
        for (std::size_t c = t; c < s.cols(); ++c) {
            if (s(r, c) == 0) continue;
            BigInt v = abs(s(r, c));
            if (!best || v < best_val) {
                best = {r, c};
                best_val = v;
                if (best_val == 1) return best;
            }
        }
    return best;
}

struct SmithWork {
    IntMatrix S, U, U_inv, V, V_inv;

    void swap_rows(std::size_t a, std::size_t b) {
        S.swap_rows(a, b);
        U.swap_rows(a, b);
        U_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        S.swap_cols(a, b);
        V.swap_cols(a, b);
        V_inv.swap_rows(a, b);
    }
    // row[dst] += q row[src]; inverse op is col[src] -= q col[dst] on U_inv.
    void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
        S.add_row(dst, src, q);
        U.add_row(dst, src, q);
        U_inv.add_col(src, dst, -q);
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
        S.add_col(dst, src, q);
        V.add_col(dst, src, q);
        V_inv.add_row(src, dst, -q);
    }
    void negate_row(std::size_t r) {
        S.negate_row(r);
        U.negate_row(r);
        U_inv.negate_col(r);
    }
};

} // namespace detail

/// Smith normal form by elementary operations, pivoting on the smallest
/// nonzero absolute value.
inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    detail::SmithWork w{A, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
                        IntMatrix::identity(n)};
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        auto piv = detail::min_pivot(w.S, t);
        if (!piv) break;
        w.swap_rows(t, piv->first);
        w.swap_cols(t, piv->second);
        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (w.S(r, t) == 0) continue;
                w.add_row(r, t, -(w.S(r, t) / w.S(t, t)));
                if (w.S(r, t) != 0) dirty = true;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (w.S(t, c) == 0) continue;
                w.add_col(c, t, -(w.S(t, c) / w.S(t, t)));
                if (w.S(t, c) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder smaller than the pivot survived; re-pivot on
                // row t / column t only.
                auto best = std::pair<std::size_t, std::size_t>{t, t};
                BigInt best_val = detail::abs(w.S(t, t));
                for (std::size_t r = t + 1; r < m; ++r)
                    if (w.S(r, t) != 0 && detail::abs(w.S(r, t)) < best_val) {
                        best = {r, t};
                        best_val = detail::abs(w.S(r, t));
                    }
                for (std::size_t c = t + 1; c < n; ++c)
                    if (w.S(t, c) != 0 && detail::abs(w.S(t, c)) < best_val) {
                        best = {t, c};
                        best_val = detail::abs(w.S(t, c));
                    }
                w.swap_rows(t, best.first);
                w.swap_cols(t, best.second);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            std::optional<std::size_t> bad_row;
            for (std::size_t r = t + 1; r < m && !bad_row; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (w.S(r, c) % w.S(t, t) != 0) {
                        bad_row = r;
                        break;
                    }
            if (!bad_row) break;
            w.add_row(t, *bad_row, 1);
        }
        if (w.S(t, t) < 0) w.negate_row(t);
    }
    return {std::move(w.U), std::move(w.S), std::move(w.V), std::move(w.U_inv), std::move(w.V_inv),
            t};
}

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMatrix& A) {
    if (!A.is_square()) throw InvalidArgument("determinant of non-square matrix " + A.shape());
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && M(r, k) == 0) ++r;
            if (r == n) return 0;
            M.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& A) {
    if (!A.is_square()) return false;
    BigInt d = determinant(A);
    return d == 1 || d == -1;
}

/// Inverse of a unimodular matrix.
inline IntMatrix inverse_unimodular(const IntMatrix& A) {
    if (!is_unimodular(A)) throw DeterminantNotUnit("matrix " + A.str() + " is not invertible over Z");
    auto snf = smith_normal_form(A);
    // S = I, so A^-1 = V U.
    return snf.V * snf.U;
}

/// Finitely generated abelian group Z^free ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k presented
/// as a subquotient of an ambient lattice Z^N. Generators are ambient
/// vectors (free ones first, then torsion in order); `projector` maps an
/// ambient vector of the subgroup onto generator coordinates.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;
    std::vector<IntVector> generators;
    IntMatrix projector;

    std::size_t generator_count() const noexcept { return generators.size(); }
    bool is_trivial() const noexcept { return generators.empty(); }

    /// Order of generator i; 0 for infinite order.
    BigInt order(std::size_t i) const {
        return i < free_rank ? BigInt(0) : torsion[i - free_rank];
    }

    /// Coordinates of the class of v; torsion entries reduced to the least
    /// non-negative residue.
    IntVector coordinates(const IntVector& v) const {
        IntVector c = projector * v;
        for (std::size_t i = free_rank; i < c.size(); ++i) {
            const BigInt& d = torsion[i - free_rank];
            c[i] %= d;
            if (c[i] < 0) c[i] += d;
        }
        return c;
    }

    bool is_zero_class(const IntVector& v) const { return is_zero(coordinates(v)); }
    bool same_class(const IntVector& a, const IntVector& b) const {
        return coordinates(a) == coordinates(b);
    }

    /// Isomorphism type only.
    bool isomorphic(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }

    std::string str() const {
        std::vector<std::string> parts;
        if (free_rank == 1) parts.push_back("Z");
        if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
        for (const auto& t : torsion) parts.push_back("Z/" + t.str());
        if (parts.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
        return out;
    }
};

/// Z^rows / im(A) for A : Z^cols -> Z^rows.
inline AbelianGroup cokernel(const IntMatrix& A) {
    auto snf = smith_normal_form(A);
    const std::size_t m = A.rows();
    std::vector<std::size_t> free_idx, tors_idx;
    for (std::size_t i = 0; i < m; ++i) {
        BigInt d = snf.diagonal(i);
        if (d == 0)
            free_idx.push_back(i);
        else if (d != 1)
            tors_idx.push_back(i);
    }
    AbelianGroup g;
    g.free_rank = free_idx.size();
    std::vector<std::size_t> order = free_idx;
    order.insert(order.end(), tors_idx.begin(), tors_idx.end());
    for (auto i : tors_idx) g.torsion.push_back(snf.diagonal(i));
    g.projector = IntMatrix(order.size(), m);
    for (std::size_t k = 0; k < order.size(); ++k) {
        g.generators.push_back(snf.U_inv.col(order[k]));
        for (std::size_t c = 0; c < m; ++c) g.projector(k, c) = snf.U(order[k], c);
    }
    return g;
}

/// Basis of ker(B) as the columns of the returned matrix.
inline IntMatrix kernel_basis(const IntMatrix& B) {
    auto snf = smith_normal_form(B);
    return snf.V.block(0, B.cols(), snf.rank, B.cols());
}

/// ker(B) / im(A), requiring B * A = 0. Generators are vectors in the
/// domain of B.
inline AbelianGroup subquotient(const IntMatrix& B, const IntMatrix& A) {
    if (B.cols() != A.rows())
        throw InvalidArgument("subquotient shape mismatch: " + B.shape() + " after " + A.shape());
    if (!(B * A).is_zero()) throw CompositeNotZero("composite B*A is not zero");
    const std::size_t n = B.cols();
    auto snf = smith_normal_form(B);
    const std::size_t r = snf.rank;
    IntMatrix K = snf.V.block(0, n, r, n);           // kernel basis, n x (n-r)
    IntMatrix to_kernel = snf.V_inv.block(r, n, 0, n); // ambient -> kernel coords
    IntMatrix C = to_kernel * A;
    AbelianGroup inner = cokernel(C);
    AbelianGroup g;
    g.free_rank = inner.free_rank;
    g.torsion = inner.torsion;
    for (const auto& v : inner.generators) g.generators.push_back(K * v);
    g.projector = inner.projector * to_kernel;
    return g;
}

} // namespace surfcohom
