#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcohom/coefficients.hpp"
#include "surfcohom/diagonal.hpp"
#include "surfcohom/resolution.hpp"
#include "surfcohom/smith.hpp"

namespace surfcohom {

/// Element of Hom_G(P_d, M), stored as the values on the free generators of
/// P_d (x; y_1.., z_1..; w) concatenated, each a vector in Z^rank.
struct Cochain {
    int degree = 0;
    std::size_t rank = 1;
    IntVector values;

    IntVector value(std::size_t label_pos) const {
        return IntVector(values.begin() + static_cast<std::ptrdiff_t>(label_pos * rank),
                         values.begin() + static_cast<std::ptrdiff_t>((label_pos + 1) * rank));
    }
};

/// Hom_G(P, M):  0 -> M --D1--> M^r --D2--> M -> 0
class CochainComplex {
public:
    CochainComplex(Resolution res, CoefficientModule module)
        : res_(std::move(res)), module_(std::move(module)) {
        if (!(res_.presentation() == module_.presentation()))
            throw PresentationMismatch("module is over " + module_.presentation().str() +
                                       ", resolution over " + res_.presentation().str());
        const std::size_t k = module_.rank();
        std::vector<IntMatrix> d1_blocks, d2_blocks;
        for (const auto& label : res_.p1_basis()) {
            d1_blocks.push_back(module_.evaluate(res_.d1(label).coordinate(BasisLabel::x())));
            d2_blocks.push_back(module_.evaluate(res_.d2().coordinate(label)));
        }
        d1_ = vstack(d1_blocks, k);
        d2_ = hstack(d2_blocks, k);
        if (!(d2_ * d1_).is_zero())
            throw IdentityCheckFailure("D2 * D1 is not zero for module " + module_.name());
    }

    const Resolution& resolution() const noexcept { return res_; }
    const CoefficientModule& module() const noexcept { return module_; }
    const IntMatrix& D1() const noexcept { return d1_; }
    const IntMatrix& D2() const noexcept { return d2_; }
    std::size_t rank() const noexcept { return module_.rank(); }

    std::size_t labels_in_degree(int d) const { return d == 1 ? res_.p1_rank() : 1; }

    Cochain cochain(int degree, IntVector values) const {
        if (values.size() != labels_in_degree(degree) * rank())
            throw InvalidArgument("cochain of degree " + std::to_string(degree) + " needs " +
                                  std::to_string(labels_in_degree(degree) * rank()) + " entries");
        return {degree, rank(), std::move(values)};
    }

    bool is_cocycle(const Cochain& c) const {
        if (c.degree == 0) return is_zero(d1_ * c.values);
        if (c.degree == 1) return is_zero(d2_ * c.values);
        return true;
    }

private:
    Resolution res_;
    CoefficientModule module_;
    IntMatrix d1_, d2_;
};

inline CochainComplex build_cochain_complex(const Resolution& res, const CoefficientModule& m) {
    return CochainComplex(res, m);
}

/// A cocycle together with a human-readable name like "y1*-y2*".
struct NamedClass {
    std::string label;
    IntVector cocycle;
};

struct CohomologyReport {
    AbelianGroup H0, H1, H2;
    // Classes named as in the standard generator lists, present only when
    // they generate the computed group.
    std::vector<NamedClass> h0_named, h1_named, h2_named;

    /// Named H1 generators if available, otherwise the computed ones.
    std::vector<NamedClass> h1_basis() const {
        if (!h1_named.empty() || H1.is_trivial()) return h1_named;
        std::vector<NamedClass> out;
        for (std::size_t i = 0; i < H1.generators.size(); ++i)
            out.push_back({"g" + std::to_string(i + 1), H1.generators[i]});
        return out;
    }
};

namespace detail {

// True when the classes of `vs` generate the group and there are exactly as
// many of them as the group has invariant-factor generators.
inline bool generates(const AbelianGroup& g, const std::vector<IntVector>& vs) {
    if (vs.size() != g.generator_count()) return false;
    const std::size_t n = g.generator_count();
    if (n == 0) return true;
    IntMatrix m(n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVector c = g.coordinates(vs[j]);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
    }
    for (std::size_t i = g.free_rank; i < n; ++i) m(i, n + i) = g.torsion[i - g.free_rank];
    return cokernel(m).is_trivial();
}

// Sign pattern of a rank-1 module: generators acting by -1.
inline std::optional<std::vector<Generator>> sign_pattern(const CoefficientModule& m) {
    if (m.rank() != 1) return std::nullopt;
    std::vector<Generator> neg;
    const auto gens = m.presentation().generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const BigInt& v = m.action()[i](0, 0);
        if (v == -1) neg.push_back(gens[i]);
        else if (v != 1) return std::nullopt;
    }
    return neg;
}

inline NamedClass dual_combination(const Resolution& res, std::vector<std::pair<BasisLabel, int>> parts) {
    IntVector v(res.p1_rank());
    std::string label;
    for (const auto& [l, s] : parts) {
        v[res.p1_position(l)] += s;
        label += (label.empty() ? (s < 0 ? "-" : "") : (s < 0 ? "-" : "+")) + l.str() + "*";
    }
    return {label, v};
}

// Generator lists for the rank-1 local systems of the standard classification.
inline std::vector<NamedClass> standard_h1_generators(const Resolution& res,
                                                      const CoefficientModule& m) {
    auto pattern = sign_pattern(m);
    if (!pattern) return {};
    const auto& pres = res.presentation();
    const int n = pres.genus();
    std::vector<NamedClass> out;
    auto y = BasisLabel::y;
    if (pres.is_orientable()) {
        const bool trivial = pattern->empty();
        const bool twisted = pattern->size() == 1 && (*pattern)[0] == gen_b(n);
        if (!trivial && !twisted) return {};
        for (int i = 1; i <= (trivial ? n : n - 1); ++i) out.push_back(dual_combination(res, {{y(i), 1}}));
        for (int i = 1; i <= n; ++i) out.push_back(dual_combination(res, {{BasisLabel::z(i), 1}}));
        return out;
    }
    const std::vector<Generator> t1{gen_a(1)}, t2{gen_a(1), gen_a(2)};
    int first_diff = 0;
    if (pattern->empty()) {
        first_diff = 1;
    } else if (*pattern == t1) {
        out.push_back(dual_combination(res, {{y(1), 1}}));
        first_diff = 2;
    } else if (*pattern == t2) {
        out.push_back(dual_combination(res, {{y(1), 1}}));
        out.push_back(dual_combination(res, {{y(1), 1}, {y(2), 1}}));
        first_diff = 3;
    } else {
        return {};
    }
    for (int k = first_diff; k <= n - 1; ++k) out.push_back(dual_combination(res, {{y(k), 1}, {y(k + 1), -1}}));
    return out;
}

} // namespace detail

/// H0 = ker D1, H1 = ker D2 / im D1, H2 = coker D2, with cocycle generators.
inline CohomologyReport cohomology_groups(const CochainComplex& cx) {
    const std::size_t k = cx.rank();
    CohomologyReport rep;
    rep.H0 = subquotient(cx.D1(), IntMatrix(k, 0));
    rep.H1 = subquotient(cx.D2(), cx.D1());
    rep.H2 = cokernel(cx.D2());

    if (k == 1 && cx.module().is_trivial()) rep.h0_named.push_back({"x*", IntVector{1}});

    auto named = detail::standard_h1_generators(cx.resolution(), cx.module());
    std::vector<IntVector> vs;
    for (const auto& c : named) vs.push_back(c.cocycle);
    if (!named.empty() && detail::generates(rep.H1, vs)) rep.h1_named = std::move(named);

    if (k == 1 && detail::generates(rep.H2, {IntVector{1}})) rep.h2_named.push_back({"w*", IntVector{1}});
    return rep;
}

inline CohomologyReport cohomology_groups(const CoefficientModule& m) {
    return cohomology_groups(CochainComplex(Resolution(m.presentation()), m));
}

/// H^2 as K / (∂R/∂x_1, ..., ∂R/∂x_m)K. The evaluated Fox derivatives are
/// accumulated directly as matrices in one pass over the relator, without
/// going through the resolution.
inline AbelianGroup h2_lyndon(const CoefficientModule& m) {
    const auto& pres = m.presentation();
    const std::size_t k = m.rank();
    const auto gens = pres.generators();
    std::vector<IntMatrix> blocks(gens.size(), IntMatrix(k, k));
    IntMatrix prefix = IntMatrix::identity(k);
    const Word rel = pres.relator();
    for (const auto& l : rel.letters()) {
        const std::size_t pos = pres.generator_position(l.generator);
        if (l.exponent > 0) blocks[pos] += prefix;
        prefix = prefix * m.evaluate(l);
        if (l.exponent < 0) blocks[pos] -= prefix;
    }
    return cokernel(hstack(blocks, k));
}

/// Cup product of degree-1 cocycles through Δ11:
///   (u ⌣ v)(w) = Σ coeff · θ_M(g)u(e) ⊗ θ_N(g')v(e')
/// over the terms coeff·(g e ⊗ g' e') of Δ11(w).
inline Cochain cup11(const CochainComplex& cm, const Cochain& u, const CochainComplex& cn,
                     const Cochain& v, const TensorElement& delta11) {
    if (u.degree != 1 || v.degree != 1) throw InvalidArgument("cup11 needs degree-1 cochains");
    if (!cm.is_cocycle(u)) throw NotACocycle("left factor " + to_string(u.values) + " is not a cocycle");
    if (!cn.is_cocycle(v)) throw NotACocycle("right factor " + to_string(v.values) + " is not a cocycle");
    const auto& res = cm.resolution();
    const auto& M = cm.module();
    const auto& N = cn.module();
    IntVector out(M.rank() * N.rank());
    std::map<Word, IntMatrix> lc, rc;
    auto eval = [](std::map<Word, IntMatrix>& cache, const CoefficientModule& mod, const Word& w) {
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, mod.evaluate(w)).first;
        return it->second;
    };
    for (const auto& t : delta11.terms()) {
        if (t.bidegree() != std::pair{1, 1}) continue;
        IntVector lu = eval(lc, M, t.left_word) * u.value(res.p1_position(t.left_basis));
        IntVector rv = eval(rc, N, t.right_word) * v.value(res.p1_position(t.right_basis));
        out = out + t.coeff * kronecker(lu, rv);
    }
    return {2, M.rank() * N.rank(), std::move(out)};
}

inline Cochain cup11(const CochainComplex& cm, const Cochain& u, const CochainComplex& cn,
                     const Cochain& v) {
    return cup11(cm, u, cn, v, delta11_closed(cm.resolution().presentation()));
}

/// Product of an H^0 class m ∈ M^G with a degree-q cochain over N:
/// value on each generator e is m ⊗ v(e).
inline Cochain cup_with_h0(const CochainComplex& cm, const IntVector& m, const Cochain& v) {
    if (m.size() != cm.rank()) throw InvalidArgument("H^0 element has the wrong length");
    if (!is_zero(cm.D1() * m)) throw NotInvariant("element " + to_string(m) + " is not G-invariant");
    const std::size_t labels = v.values.size() / v.rank;
    Cochain out{v.degree, cm.rank() * v.rank, {}};
    for (std::size_t i = 0; i < labels; ++i) {
        IntVector k = kronecker(m, v.value(i));
        out.values.insert(out.values.end(), k.begin(), k.end());
    }
    return out;
}

struct CupTable {
    std::vector<std::string> row_labels, col_labels;
    std::vector<IntVector> row_cocycles, col_cocycles;
    AbelianGroup H2;                         // of M⊗N
    std::optional<IntVector> w_coordinates;  // class of w* when H2 is cyclic on it
    std::vector<std::vector<IntVector>> entries;  // H2 coordinates

    /// "0", "[w*]", "-[w*]" or the coordinate vector.
    std::string describe(std::size_t i, std::size_t j) const {
        const IntVector& c = entries[i][j];
        if (is_zero(c)) return "0";
        if (w_coordinates) {
            if (c == *w_coordinates) return "[w*]";
            if (c == H2.coordinates(IntVector{-1})) return "-[w*]";
        }
        return to_string(c);
    }
};

/// All products of H1 generators of M with H1 generators of N, expressed
/// in the H2 generator basis of M⊗N.
inline CupTable cup_table(const CochainComplex& cm, const CochainComplex& cn,
                          const TensorElement& delta11) {
    CohomologyReport rm = cohomology_groups(cm), rn = cohomology_groups(cn);
    CochainComplex ct(cm.resolution(), tensor(cm.module(), cn.module()));
    CupTable table;
    table.H2 = cokernel(ct.D2());
    if (ct.rank() == 1) {
        IntVector w = table.H2.coordinates(IntVector{1});
        if (!is_zero(w)) table.w_coordinates = w;
    }
    for (const auto& c : rm.h1_basis()) {
        table.row_labels.push_back(c.label);
        table.row_cocycles.push_back(c.cocycle);
    }
    for (const auto& c : rn.h1_basis()) {
        table.col_labels.push_back(c.label);
        table.col_cocycles.push_back(c.cocycle);
    }
    for (const auto& u : table.row_cocycles) {
        std::vector<IntVector> row;
        for (const auto& v : table.col_cocycles) {
            Cochain prod = cup11(cm, cm.cochain(1, u), cn, cn.cochain(1, v), delta11);
            row.push_back(table.H2.coordinates(prod.values));
        }
        table.entries.push_back(std::move(row));
    }
    return table;
}

inline CupTable cup_table(const CoefficientModule& m, const CoefficientModule& n) {
    Resolution res(m.presentation());
    return cup_table(CochainComplex(res, m), CochainComplex(res, n),
                     delta11_closed(m.presentation()));
}

struct BundleClassification {
    AbelianGroup via_cohomology;
    AbelianGroup direct;
};

/// Torus bundles with holonomy θ correspond to H^2(S; Z^n)_θ. The second
/// route computes the coinvariants of the orientation-twisted action,
/// Z^n / <χ(g)θ(g)x - x>, where χ is the orientation character (trivial for
/// orientable surfaces, a_i -> -1 otherwise).
inline BundleClassification classify_torus_bundles(const CoefficientModule& theta) {
    BundleClassification out;
    out.via_cohomology = cohomology_groups(theta).H2;
    const auto& pres = theta.presentation();
    const std::size_t k = theta.rank();
    std::vector<IntMatrix> blocks;
    for (const auto& g : pres.generators()) {
        const BigInt chi = pres.is_orientable() ? 1 : -1;
        blocks.push_back(theta.action(g) * chi - IntMatrix::identity(k));
    }
    out.direct = cokernel(hstack(blocks, k));
    if (!out.via_cohomology.isomorphic(out.direct))
        throw IdentityCheckFailure("torus bundle classification mismatch: H^2 = " +
                                   out.via_cohomology.str() + " but coinvariants = " +
                                   out.direct.str());
    return out;
}

} // namespace surfcohom
