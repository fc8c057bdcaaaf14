#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "surfcohom/coefficients.hpp"
#include "surfcohom/resolution.hpp"

namespace surfcohom {

/// coeff · (left_word·left_basis ⊗ right_word·right_basis)
struct TensorTerm {
    BigInt coeff;
    Word left_word;
    BasisLabel left_basis;
    Word right_word;
    BasisLabel right_basis;

    std::pair<int, int> bidegree() const { return {left_basis.degree(), right_basis.degree()}; }
};

/// Finite Z-combination of elementary tensors in P ⊗ P, collected on
/// (left_word, left_basis, right_word, right_basis).
class TensorElement {
public:
    using Key = std::tuple<Word, BasisLabel, Word, BasisLabel>;

    void add(const Word& lw, BasisLabel lb, const Word& rw, BasisLabel rb, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(Key{lw, lb, rw, rb}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Expands (r·lb) ⊗ (s·rb) for group-ring coefficients r, s.
    void add(const GroupRingElement& r, BasisLabel lb, const GroupRingElement& s, BasisLabel rb,
             const BigInt& c = 1) {
        for (const auto& [u, cu] : r.terms())
            for (const auto& [v, cv] : s.terms()) add(u, lb, v, rb, c * cu * cv);
    }

    /// Expands (left chain) ⊗ (right chain).
    void add(const ChainElement& left, const ChainElement& right, const BigInt& c = 1) {
        for (const auto& [lb, r] : left.coords())
            for (const auto& [rb, s] : right.coords()) add(r, lb, s, rb, c);
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_)
            add(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_)
            add(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    /// Diagonal action g·(u ⊗ v) = gu ⊗ gv, scaled by c.
    TensorElement act(const Word& g, const BigInt& c = 1) const {
        TensorElement out;
        for (const auto& [k, v] : terms_)
            out.add(g * std::get<0>(k), std::get<1>(k), g * std::get<2>(k), std::get<3>(k), c * v);
        return out;
    }

    /// Projection onto the bidegree (p, q) component.
    TensorElement component(int p, int q) const {
        TensorElement out;
        for (const auto& [k, c] : terms_)
            if (std::get<1>(k).degree() == p && std::get<3>(k).degree() == q) out.terms_.emplace(k, c);
        return out;
    }

    std::vector<TensorTerm> terms() const {
        std::vector<TensorTerm> out;
        out.reserve(terms_.size());
        for (const auto& [k, c] : terms_)
            out.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)});
        return out;
    }

    const std::map<Key, BigInt>& raw() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool operator==(const TensorElement&) const = default;

private:
    std::map<Key, BigInt> terms_;
};

// ---------------------------------------------------------------------------
// Operators on P ⊗ P

/// (d ⊗ 1), no sign.
inline TensorElement boundary_left(const Resolution& res, const TensorElement& t) {
    TensorElement out;
    for (const auto& term : t.terms()) {
        if (term.left_basis.degree() == 0) continue;
        const ChainElement& d = res.boundary(term.left_basis);
        for (const auto& [lb, r] : d.coords())
            out.add(term.left_word * r, lb, GroupRingElement(term.right_word), term.right_basis,
                    term.coeff);
    }
    return out;
}

/// (1 ⊗ d), no sign.
inline TensorElement boundary_right(const Resolution& res, const TensorElement& t) {
    TensorElement out;
    for (const auto& term : t.terms()) {
        if (term.right_basis.degree() == 0) continue;
        const ChainElement& d = res.boundary(term.right_basis);
        for (const auto& [rb, r] : d.coords())
            out.add(GroupRingElement(term.left_word), term.left_basis, term.right_word * r, rb,
                    term.coeff);
    }
    return out;
}

/// ∂(u ⊗ v) = du ⊗ v + (-1)^|u| u ⊗ dv.
inline TensorElement boundary(const Resolution& res, const TensorElement& t) {
    TensorElement out = boundary_left(res, t);
    TensorElement even, odd;
    for (const auto& term : t.terms())
        (term.left_basis.degree() % 2 == 0 ? even : odd)
            .add(term.left_word, term.left_basis, term.right_word, term.right_basis, term.coeff);
    out += boundary_right(res, even);
    out -= boundary_right(res, odd);
    return out;
}

/// (ε ⊗ 1): keeps terms with a degree-0 left factor.
inline ChainElement counit_left(const TensorElement& t, int right_degree) {
    ChainElement out(right_degree);
    for (const auto& term : t.terms())
        if (term.left_basis.degree() == 0 && term.right_basis.degree() == right_degree)
            out.add(term.right_basis, GroupRingElement(term.right_word, term.coeff));
    return out;
}

/// (1 ⊗ ε): keeps terms with a degree-0 right factor.
inline ChainElement counit_right(const TensorElement& t, int left_degree) {
    ChainElement out(left_degree);
    for (const auto& term : t.terms())
        if (term.right_basis.degree() == 0 && term.left_basis.degree() == left_degree)
            out.add(term.left_basis, GroupRingElement(term.left_word, term.coeff));
    return out;
}

// ---------------------------------------------------------------------------
// Diagonal components

/// Δ0(x) = x ⊗ x
inline TensorElement delta0() {
    TensorElement t;
    t.add(Word{}, BasisLabel::x(), Word{}, BasisLabel::x(), 1);
    return t;
}

/// Δ1(y_i) = y_i ⊗ a_i x + x ⊗ y_i,  Δ1(z_i) = z_i ⊗ b_i x + x ⊗ z_i
inline TensorElement delta1(BasisLabel label) {
    Generator g;
    if (label.kind == BasisLabel::Kind::Y)
        g = gen_a(label.index);
    else if (label.kind == BasisLabel::Kind::Z)
        g = gen_b(label.index);
    else
        throw InvalidArgument("delta1 needs a degree-1 label, got " + label.str());
    TensorElement t;
    t.add(Word{}, label, Word::of(g), BasisLabel::x(), 1);
    t.add(Word{}, BasisLabel::x(), Word{}, label, 1);
    return t;
}

/// Δ02(w) = x ⊗ w
inline TensorElement delta02() {
    TensorElement t;
    t.add(Word{}, BasisLabel::x(), Word{}, BasisLabel::w(), 1);
    return t;
}

/// ZG-linear extension of Δ0 to a degree-0 chain.
inline TensorElement delta0(const ChainElement& c) {
    if (c.degree() != 0) throw InvalidArgument("delta0 needs a degree-0 chain");
    TensorElement out;
    const TensorElement base = delta0();
    for (const auto& [label, r] : c.coords())
        for (const auto& [g, k] : r.terms()) out += base.act(g, k);
    return out;
}

/// ZG-linear extension of Δ1 to a degree-1 chain.
inline TensorElement delta1(const ChainElement& c) {
    if (c.degree() != 1) throw InvalidArgument("delta1 needs a degree-1 chain");
    TensorElement out;
    for (const auto& [label, r] : c.coords()) {
        const TensorElement base = delta1(label);
        for (const auto& [g, k] : r.terms()) out += base.act(g, k);
    }
    return out;
}

/// Δ11(w) written out from the closed formulas for the standard
/// presentations, all words freely reduced and like terms collected.
inline TensorElement delta11_closed(const SurfacePresentation& pres) {
    const int n = pres.genus();
    TensorElement t;
    const auto one = GroupRingElement::one();
    auto ring = [](const Word& w) { return GroupRingElement(w); };

    if (!pres.is_orientable()) {
        // Q_k = a_1^2 ... a_k^2
        auto Q = [&](int k) { return pres.relator_prefix(k); };
        auto a = [](int i) { return Word::of(gen_a(i)); };
        auto coeff_y = [&](int j) { return ring(Q(j - 1)) * (one + ring(a(j))); };
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j < i; ++j) {
                t.add(coeff_y(j), BasisLabel::y(j), ring(Q(i - 1)), BasisLabel::y(i));
                t.add(coeff_y(j), BasisLabel::y(j), ring(Q(i - 1) * a(i)), BasisLabel::y(i));
            }
            t.add(ring(Q(i - 1)), BasisLabel::y(i), ring(Q(i - 1) * a(i)), BasisLabel::y(i));
        }
        return t;
    }

    auto P = [&](int k) { return pres.relator_prefix(k); };
    auto a = [](int i) { return Word::of(gen_a(i)); };
    auto b = [](int i) { return Word::of(gen_b(i)); };
    auto ai = [](int i) { return Word::of(gen_a(i), -1); };
    auto bi = [](int i) { return Word::of(gen_b(i), -1); };
    // Coordinates of d2(w): A_j on y_j and B_j on z_j.
    auto A = [&](int j) { return ring(P(j - 1)) * (one - ring(a(j) * b(j) * ai(j))); };
    auto B = [&](int j) { return ring(P(j - 1) * a(j)) * (one - ring(b(j) * ai(j) * bi(j))); };
    // Σ_{j<=last} (A_j y_j + B_j z_j) ⊗ (right)
    auto prefix_sum = [&](int last, const Word& right, BasisLabel rb, int sign) {
        for (int j = 1; j <= last; ++j) {
            t.add(A(j), BasisLabel::y(j), ring(right), rb, sign);
            t.add(B(j), BasisLabel::z(j), ring(right), rb, sign);
        }
    };

    for (int i = 1; i <= n; ++i) prefix_sum(i - 1, P(i - 1), BasisLabel::y(i), 1);

    for (int i = 1; i <= n - 1; ++i) {
        const Word c = P(i - 1) * a(i) * b(i) * ai(i);
        prefix_sum(i - 1, c, BasisLabel::y(i), -1);
        t.add(A(i), BasisLabel::y(i), ring(c), BasisLabel::y(i), -1);
        t.add(ring(P(i - 1) * a(i)), BasisLabel::z(i), ring(c), BasisLabel::y(i), -1);
    }

    for (int i = 1; i <= n; ++i) {
        const Word c = P(i - 1) * a(i);
        prefix_sum(i - 1, c, BasisLabel::z(i), 1);
        t.add(ring(P(i - 1)), BasisLabel::y(i), ring(c), BasisLabel::z(i), 1);
    }

    for (int i = 1; i <= n - 1; ++i) prefix_sum(i, P(i), BasisLabel::z(i), -1);

    t.add(Word{}, BasisLabel::z(n), b(n), BasisLabel::y(n), -1);
    return t;
}

/// Δ2(w) = s~_1 Δ1 d2(w) projected to bidegree (1,1). Only the part
/// s_0(gx) ⊗ g'e of s~_1(gx ⊗ g'e) lands in P1 ⊗ P1; s~_1 of P1 ⊗ P0
/// terms lands in P2 ⊗ P0. Because s~ is only Z-linear, Δ1 d2(w) is
/// expanded term by term, with each word g replaced by the resolution's
/// chosen representative before s_0 is applied.
inline TensorElement delta11_recursive(const Resolution& res) {
    TensorElement out;
    for (const auto& [label, r] : res.d2().coords()) {
        for (const auto& [g, c] : r.terms()) {
            // Δ1(g e) = g e ⊗ g a x + g x ⊗ g e; only the second summand
            // contributes to P1 ⊗ P1.
            const Word rep = res.representative(g);
            const ChainElement s0 = contracting_s0(res, rep);
            for (const auto& [lb, coord] : s0.coords())
                out.add(coord, lb, GroupRingElement(rep), label, c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation through coefficient modules

/// Image of a tensor element under Z[G]⊗Z[G] -> End(M⊗N): for each pair of
/// basis labels, the sum of coeff · θ_M(left_word) ⊗ θ_N(right_word).
using EvaluatedTensor = std::map<std::pair<BasisLabel, BasisLabel>, IntMatrix>;

inline EvaluatedTensor evaluate_tensor(const TensorElement& t, const CoefficientModule& m,
                                       const CoefficientModule& n) {
    EvaluatedTensor out;
    std::map<Word, IntMatrix> left_cache, right_cache;
    auto eval = [](std::map<Word, IntMatrix>& cache, const CoefficientModule& mod, const Word& w) {
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, mod.evaluate(w)).first;
        return it->second;
    };
    for (const auto& term : t.terms()) {
        IntMatrix k = kronecker(eval(left_cache, m, term.left_word),
                                eval(right_cache, n, term.right_word)) *
                      term.coeff;
        auto key = std::make_pair(term.left_basis, term.right_basis);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, std::move(k));
        else
            it->second += k;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Label -> Σ coeff · θ(word) for a chain element.
inline std::map<BasisLabel, IntMatrix> evaluate_chain(const ChainElement& c,
                                                      const CoefficientModule& m) {
    std::map<BasisLabel, IntMatrix> out;
    for (const auto& [label, r] : c.coords()) {
        IntMatrix e = m.evaluate(r);
        if (!e.is_zero()) out.emplace(label, std::move(e));
    }
    return out;
}

struct IdentityCheck {
    std::string name;
    std::string component;
    bool passed = true;
    std::string detail;
};

struct ChainIdentityReport {
    std::vector<IdentityCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const IdentityCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

namespace detail {

inline std::string describe(const EvaluatedTensor& e) {
    std::string out;
    for (const auto& [k, m] : e) {
        if (!out.empty()) out += "; ";
        out += k.first.str() + "⊗" + k.second.str() + " -> " + m.str();
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

/// Checks the chain-map identities of the partial diagonal after
/// evaluating every word through (M, N) on the left and right factors:
///  (i)   (ε⊗1)Δ1 = 1 = (1⊗ε)Δ1 on P1
///  (ii)  ∂Δ1 = Δ0 d1
///  (iii) (d1⊗1)Δ11(w) + (1⊗d2)Δ02(w) = [Δ1 d2(w)]_(0,1)
///  (iv)  R = [Δ1 d2(w)]_(1,0) + (1⊗d1)Δ11(w) lies in im(d2⊗1). By
///        exactness of P this holds iff (d1⊗1)R = 0.
inline ChainIdentityReport verify_chain_identity(const Resolution& res,
                                                 const CoefficientModule& m,
                                                 const CoefficientModule& n,
                                                 const TensorElement& delta11) {
    ChainIdentityReport report;
    const std::size_t km = m.rank(), kn = n.rank();

    {
        IdentityCheck c{"(i) counit", "(0,1)/(1,0)", true, {}};
        for (const auto& label : res.p1_basis()) {
            const TensorElement d = delta1(label);
            auto left = evaluate_chain(counit_left(d, 1), n);
            auto right = evaluate_chain(counit_right(d, 1), m);
            std::map<BasisLabel, IntMatrix> want_l{{label, IntMatrix::identity(kn)}};
            std::map<BasisLabel, IntMatrix> want_r{{label, IntMatrix::identity(km)}};
            if (left != want_l || right != want_r) {
                c.passed = false;
                c.detail = "counit fails on " + label.str();
                break;
            }
        }
        report.checks.push_back(c);
    }

    {
        IdentityCheck c{"(ii) degree-1 chain map", "(0,0)", true, {}};
        for (const auto& label : res.p1_basis()) {
            auto lhs = evaluate_tensor(boundary(res, delta1(label)), m, n);
            auto rhs = evaluate_tensor(delta0(res.d1(label)), m, n);
            if (lhs != rhs) {
                c.passed = false;
                c.detail = "∂Δ1(" + label.str() + ") = " + detail::describe(lhs) +
                           " but Δ0 d1 = " + detail::describe(rhs);
                break;
            }
        }
        report.checks.push_back(c);
    }

    const TensorElement d1d2 = delta1(res.d2());
    {
        IdentityCheck c{"(iii) degree-2 chain map", "(0,1)", true, {}};
        TensorElement lhs = boundary_left(res, delta11.component(1, 1)) +
                            boundary_right(res, delta02());
        auto el = evaluate_tensor(lhs, m, n);
        auto er = evaluate_tensor(d1d2.component(0, 1), m, n);
        if (el != er) {
            c.passed = false;
            c.detail = "(d1⊗1)Δ11 + (1⊗d2)Δ02 = " + detail::describe(el) +
                       " but [Δ1 d2(w)]_(0,1) = " + detail::describe(er);
        }
        report.checks.push_back(c);
    }

    {
        IdentityCheck c{"(iv) Δ20 solvability", "(1,0)", true, {}};
        TensorElement residual = d1d2.component(1, 0) + boundary_right(res, delta11.component(1, 1));
        auto e = evaluate_tensor(boundary_left(res, residual), m, n);
        if (!e.empty()) {
            c.passed = false;
            c.detail = "(d1⊗1) of the (1,0) residual is " + detail::describe(e);
        }
        report.checks.push_back(c);
    }
    return report;
}

inline ChainIdentityReport verify_chain_identity(const Resolution& res,
                                                 const CoefficientModule& m,
                                                 const CoefficientModule& n) {
    return verify_chain_identity(res, m, n, delta11_closed(res.presentation()));
}

// ---------------------------------------------------------------------------
// Text rendering

/// Word with runs of a repeated letter written as powers: "a1^2 a2".
inline std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        const long long power = static_cast<long long>(j - i) * ls[i].exponent;
        if (!out.empty()) out += ' ';
        out += ls[i].generator.name();
        if (power != 1) out += "^" + std::to_string(power);
        i = j;
    }
    return out;
}

inline std::string format_tensor(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::string out;
    auto side = [](const Word& w, BasisLabel b) {
        return w.empty() ? b.str() : format_word(w) + " " + b.str();
    };
    for (const auto& term : t.terms()) {
        const bool neg = term.coeff < 0;
        const BigInt mag = neg ? BigInt(-term.coeff) : term.coeff;
        if (out.empty())
            out += neg ? "- " : "";
        else
            out += neg ? " - " : " + ";
        if (mag != 1) out += mag.str() + " ";
        out += side(term.left_word, term.left_basis) + " ⊗ " +
               side(term.right_word, term.right_basis);
    }
    return out;
}

} // namespace surfcohom
