#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "surfcohom/cohomology.hpp"

namespace surfcohom {

// ---------------------------------------------------------------------------
// Random inputs. Distributions are derived from raw mt19937_64 output so the
// same seed gives the same cases on every standard library.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long long uniform(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(engine_() % span);
    }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Random freely reduced word of length at most max_len.
inline Word random_word(Rng& rng, const SurfacePresentation& pres, int max_len) {
    const auto gens = pres.generators();
    const long long len = rng.uniform(0, max_len);
    std::vector<Letter> letters;
    for (long long i = 0; i < len; ++i)
        letters.push_back({gens[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(gens.size()) - 1))],
                           rng.coin() ? 1 : -1});
    return Word(std::move(letters));
}

inline GroupRingElement random_ring_element(Rng& rng, const SurfacePresentation& pres,
                                            int terms, int max_len) {
    GroupRingElement r;
    for (int i = 0; i < terms; ++i) r.add(random_word(rng, pres, max_len), rng.uniform(-3, 3));
    return r;
}

/// Random element of GL_k(Z) as a product of elementary matrices and signs.
inline IntMatrix random_unimodular(Rng& rng, std::size_t k, int steps = 4) {
    IntMatrix m = IntMatrix::identity(k);
    if (k == 1) {
        m(0, 0) = rng.coin() ? 1 : -1;
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(k) - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(k) - 2));
        if (j >= i) ++j;
        m.add_row(i, j, rng.uniform(-2, 2));
    }
    if (rng.coin()) m.negate_row(static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(k) - 1)));
    return m;
}

/// Random valid local system of rank k. Orientable handles come either as
/// commuting pairs (A, ±A^e) or as consecutive pairs (A, B), (B, A) whose
/// commutators cancel; nonorientable generators come as pairs (X, X^-1) or
/// as conjugated diagonal involutions.
inline CoefficientModule random_module(Rng& rng, const SurfacePresentation& pres, std::size_t k) {
    std::map<Generator, IntMatrix> action;
    const int n = pres.genus();
    auto power = [](const IntMatrix& a, long long e) {
        IntMatrix base = e < 0 ? inverse_unimodular(a) : a;
        IntMatrix out = IntMatrix::identity(a.rows());
        for (long long i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
        return out;
    };
    if (pres.is_orientable()) {
        for (int i = 1; i <= n;) {
            if (i < n && rng.coin()) {
                IntMatrix A = random_unimodular(rng, k), B = random_unimodular(rng, k);
                action[gen_a(i)] = A;
                action[gen_b(i)] = B;
                action[gen_a(i + 1)] = B;
                action[gen_b(i + 1)] = A;
                i += 2;
            } else {
                IntMatrix A = random_unimodular(rng, k);
                IntMatrix B = power(A, rng.uniform(-2, 2));
                if (rng.coin()) B *= BigInt(-1);
                action[gen_a(i)] = A;
                action[gen_b(i)] = B;
                i += 1;
            }
        }
    } else {
        for (int i = 1; i <= n;) {
            if (i < n && rng.coin()) {
                IntMatrix X = random_unimodular(rng, k);
                action[gen_a(i)] = X;
                action[gen_a(i + 1)] = inverse_unimodular(X);
                i += 2;
            } else {
                IntMatrix D = IntMatrix::identity(k);
                for (std::size_t r = 0; r < k; ++r)
                    if (rng.coin()) D(r, r) = -1;
                IntMatrix U = random_unimodular(rng, k);
                action[gen_a(i)] = U * D * inverse_unimodular(U);
                i += 1;
            }
        }
    }
    return make_module(k, action, pres, "random");
}

// ---------------------------------------------------------------------------
// Identity suite

struct VerifyOptions {
    int genus_max = 5;           // orientable 1..g, nonorientable 2..g+1
    std::uint64_t seed = 42;
    int fox_words = 1000;
    int fox_max_len = 32;
    int product_pairs = 500;
    int homotopy_words = 500;
    int random_modules = 100;
    int random_module_rank_max = 3;
    int random_module_genus_max = 4;
    int cup_random_pairs = 50;
    bool corrupt_delta11 = false;  // failure-path hook
};

struct SuiteResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;  // witnesses, capped

    bool passed() const { return failures.empty(); }

    void fail(std::string witness) {
        if (failures.size() < 20) failures.push_back(std::move(witness));
    }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool ok() const {
        for (const auto& s : suites)
            if (!s.passed()) return false;
        return true;
    }
};

inline std::vector<SurfacePresentation> surfaces_up_to(int genus_max) {
    std::vector<SurfacePresentation> out;
    for (int n = 1; n <= genus_max; ++n) out.push_back(SurfacePresentation::orientable(n));
    for (int n = 2; n <= genus_max + 1; ++n) out.push_back(SurfacePresentation::nonorientable(n));
    return out;
}

/// Δ11 with one spurious term, used to exercise the failure path.
inline TensorElement corrupted_delta11(const SurfacePresentation& pres) {
    TensorElement t = delta11_closed(pres);
    const BasisLabel e = pres.is_orientable() ? BasisLabel::z(pres.genus()) : BasisLabel::y(1);
    t.add(Word{}, e, Word{}, e, 1);
    return t;
}

inline GroupRingElement fox_identity_lhs(const SurfacePresentation& pres, const Word& w) {
    GroupRingElement sum;
    for (const auto& g : pres.generators())
        sum += fox_derivative(w, g) * (GroupRingElement(Word::of(g)) - GroupRingElement::one());
    return sum;
}

/// Values predicted for the rank-1 built-in systems: Z and Ztilde on
/// orientable surfaces, theta0..2 on nonorientable ones. For genus 2,
/// theta2 is the orientation character and H2 is Z by twisted duality.
struct ExpectedGroups {
    std::size_t h0_free, h1_free, h2_free;
    std::vector<long long> h1_torsion, h2_torsion;
};

inline ExpectedGroups expected_builtin_groups(const SurfacePresentation& pres, std::size_t index) {
    const auto n = static_cast<std::size_t>(pres.genus());
    if (pres.is_orientable()) {
        if (index == 0) return {1, 2 * n, 1, {}, {}};
        return {0, 2 * n - 2, 0, {2}, {2}};
    }
    if (index == 0) return {1, n - 1, 0, {}, {2}};
    if (index == 2 && n == 2) return {0, 1, 1, {2}, {}};
    return {0, n - 2, 0, {2}, {2}};
}

inline bool matches(const AbelianGroup& g, std::size_t free_rank, const std::vector<long long>& torsion) {
    if (g.free_rank != free_rank || g.torsion.size() != torsion.size()) return false;
    for (std::size_t i = 0; i < torsion.size(); ++i)
        if (g.torsion[i] != torsion[i]) return false;
    return true;
}

/// Independent value of u ⌣ v on w for rank-1 systems whose H2 is Z/2:
/// the mod-2 intersection form on H^1(S; Z/2). Orientable: Σ u(y_i)v(z_i) +
/// u(z_i)v(y_i); nonorientable: Σ u(y_i)v(y_i).
inline BigInt mod2_cup_oracle(const Resolution& res, const IntVector& u, const IntVector& v) {
    const auto& pres = res.presentation();
    BigInt s = 0;
    for (int i = 1; i <= pres.genus(); ++i) {
        const auto yi = res.p1_position(BasisLabel::y(i));
        if (pres.is_orientable()) {
            const auto zi = res.p1_position(BasisLabel::z(i));
            s += u[yi] * v[zi] + u[zi] * v[yi];
        } else {
            s += u[yi] * v[yi];
        }
    }
    s %= 2;
    return s < 0 ? BigInt(s + 2) : s;
}

/// Trivial-coefficient formula on an orientable surface:
/// (u ⌣ v)(w) = Σ_i u(y_i)⊗v(z_i) - u(z_i)⊗v(y_i).
inline IntVector trivial_cup_oracle(const Resolution& res, std::size_t km, const IntVector& u,
                                    std::size_t kn, const IntVector& v) {
    const auto& pres = res.presentation();
    if (!pres.is_orientable()) throw InvalidArgument("trivial cup formula needs an orientable surface");
    auto slice = [](const IntVector& c, std::size_t pos, std::size_t k) {
        return IntVector(c.begin() + static_cast<std::ptrdiff_t>(pos * k),
                         c.begin() + static_cast<std::ptrdiff_t>((pos + 1) * k));
    };
    IntVector out(km * kn);
    for (int i = 1; i <= pres.genus(); ++i) {
        const auto yi = res.p1_position(BasisLabel::y(i));
        const auto zi = res.p1_position(BasisLabel::z(i));
        out = out + kronecker(slice(u, yi, km), slice(v, zi, kn));
        out = out - kronecker(slice(u, zi, km), slice(v, yi, kn));
    }
    return out;
}

inline VerifyReport verify_suite(const VerifyOptions& opt) {
    VerifyReport report;
    Rng rng(opt.seed);
    const auto surfaces = surfaces_up_to(opt.genus_max);

    {
        SuiteResult s{"fox_fundamental_identity", 0, {}};
        for (int t = 0; t < opt.fox_words; ++t) {
            const auto& pres = surfaces[static_cast<std::size_t>(t) % surfaces.size()];
            Word w = random_word(rng, pres, opt.fox_max_len);
            ++s.cases;
            GroupRingElement want = GroupRingElement(w) - GroupRingElement::one();
            if (fox_identity_lhs(pres, w) != want) s.fail(pres.str() + ": w = " + w.str());
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"fox_product_rule", 0, {}};
        for (int t = 0; t < opt.product_pairs; ++t) {
            const auto& pres = surfaces[static_cast<std::size_t>(t) % surfaces.size()];
            Word u = random_word(rng, pres, opt.fox_max_len / 2);
            Word v = random_word(rng, pres, opt.fox_max_len / 2);
            for (const auto& g : pres.generators()) {
                ++s.cases;
                if (fox_derivative(u * v, g) != fox_derivative(u, g) + u * fox_derivative(v, g))
                    s.fail(pres.str() + ": u = " + u.str() + ", v = " + v.str() + ", d/d" + g.name());
            }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"contracting_homotopy", 0, {}};
        for (const auto& pres : surfaces) {
            Resolution res(pres);
            ++s.cases;
            if (augmentation(contracting_s_minus1().coordinate(BasisLabel::x())) != 1)
                s.fail("ε(s_-1(1)) != 1");
        }
        for (int t = 0; t < opt.homotopy_words; ++t) {
            const auto& pres = surfaces[static_cast<std::size_t>(t) % surfaces.size()];
            Resolution res(pres);
            Word g = random_word(rng, pres, opt.fox_max_len);
            ++s.cases;
            ChainElement lhs = apply_boundary(res, contracting_s0(res, g));
            ChainElement rhs(GroupRingElement(g) - GroupRingElement::one(), BasisLabel::x());
            if (lhs != rhs) s.fail(pres.str() + ": g = " + g.str());
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"resolution_is_complex", 0, {}};
        for (const auto& pres : surfaces) {
            Resolution res(pres);
            ++s.cases;
            for (const auto& label : res.p1_basis())
                if (augmentation(res.d1(label).coordinate(BasisLabel::x())) != 0)
                    s.fail(pres.str() + ": ε d1(" + label.str() + ") != 0");
            ChainElement dd = apply_boundary(res, res.d2());
            ChainElement want(GroupRingElement(pres.relator()) - GroupRingElement::one(), BasisLabel::x());
            if (dd != want) s.fail(pres.str() + ": d1 d2(w) != (p - 1)x");
            for (const auto& m : builtin_modules(pres))
                if (!m.evaluate(dd.coordinate(BasisLabel::x())).is_zero())
                    s.fail(pres.str() + ": d1 d2(w) does not vanish in " + m.name());
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"counit_symbolic", 0, {}};
        for (const auto& pres : surfaces) {
            Resolution res(pres);
            ++s.cases;
            if (counit_left(delta0(), 0) != contracting_s_minus1() ||
                counit_right(delta0(), 0) != contracting_s_minus1())
                s.fail(pres.str() + ": Δ0 counit");
            for (const auto& label : res.p1_basis()) {
                ChainElement e(GroupRingElement::one(), label);
                if (counit_left(delta1(label), 1) != e) s.fail(pres.str() + ": (ε⊗1)Δ1(" + label.str() + ")");
                // (1⊗ε) sends a_i x to 1, so compare after augmentation.
                ChainElement r = counit_right(delta1(label), 1);
                if (r.coords().size() != 1 || augmentation(r.coordinate(label)) != 1)
                    s.fail(pres.str() + ": (1⊗ε)Δ1(" + label.str() + ")");
            }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"delta11_agreement", 0, {}};
        for (const auto& pres : surfaces) {
            ++s.cases;
            TensorElement closed = opt.corrupt_delta11 ? corrupted_delta11(pres) : delta11_closed(pres);
            if (closed != delta11_recursive(Resolution(pres)))
                s.fail(pres.str() + ": closed and recursive Δ11 differ");
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"chain_map_identities", 0, {}};
        for (const auto& pres : surfaces) {
            Resolution res(pres);
            TensorElement d11 = opt.corrupt_delta11 ? corrupted_delta11(pres) : delta11_closed(pres);
            const auto mods = builtin_modules(pres);
            for (const auto& m : mods)
                for (const auto& n : mods) {
                    ++s.cases;
                    auto r = verify_chain_identity(res, m, n, d11);
                    for (const auto& c : r.checks)
                        if (!c.passed)
                            s.fail(pres.str() + " (" + m.name() + ", " + n.name() + "): " + c.name +
                                   " failed on the " + c.component + " component: " + c.detail);
                }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"lyndon_h2", 0, {}};
        for (const auto& pres : surfaces)
            for (const auto& m : builtin_modules(pres)) {
                ++s.cases;
                auto a = h2_lyndon(m), b = cohomology_groups(m).H2;
                if (!a.isomorphic(b)) s.fail(pres.str() + " " + m.name() + ": " + a.str() + " vs " + b.str());
            }
        for (int t = 0; t < opt.random_modules; ++t) {
            const bool orientable = rng.coin();
            const int genus = orientable ? static_cast<int>(rng.uniform(1, opt.random_module_genus_max))
                                         : static_cast<int>(rng.uniform(2, opt.random_module_genus_max));
            SurfacePresentation pres(orientable ? SurfaceKind::Orientable : SurfaceKind::NonOrientable, genus);
            auto m = random_module(rng, pres, static_cast<std::size_t>(rng.uniform(1, opt.random_module_rank_max)));
            ++s.cases;
            auto a = h2_lyndon(m), b = cohomology_groups(m).H2;
            if (!a.isomorphic(b)) s.fail(pres.str() + " random module: " + a.str() + " vs " + b.str());
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"builtin_groups", 0, {}};
        for (const auto& pres : surfaces) {
            const auto mods = builtin_modules(pres);
            for (std::size_t i = 0; i < mods.size(); ++i) {
                ++s.cases;
                auto rep = cohomology_groups(mods[i]);
                auto e = expected_builtin_groups(pres, i);
                if (!matches(rep.H0, e.h0_free, {}) || !matches(rep.H1, e.h1_free, e.h1_torsion) ||
                    !matches(rep.H2, e.h2_free, e.h2_torsion))
                    s.fail(pres.str() + " " + mods[i].name() + ": got (" + rep.H0.str() + ", " +
                           rep.H1.str() + ", " + rep.H2.str() + ")");
            }
        }
        report.suites.push_back(std::move(s));
    }

    {
        // Cup tables of the built-in systems against independent formulas.
        SuiteResult s{"builtin_cup_tables", 0, {}};
        for (const auto& pres : surfaces) {
            Resolution res(pres);
            TensorElement d11 = opt.corrupt_delta11 ? corrupted_delta11(pres) : delta11_closed(pres);
            const auto mods = builtin_modules(pres);
            for (const auto& m : mods)
                for (const auto& n : mods) {
                    CochainComplex cm(res, m), cn(res, n);
                    CupTable t = cup_table(cm, cn, d11);
                    for (std::size_t i = 0; i < t.row_cocycles.size(); ++i)
                        for (std::size_t j = 0; j < t.col_cocycles.size(); ++j) {
                            ++s.cases;
                            const auto& u = t.row_cocycles[i];
                            const auto& v = t.col_cocycles[j];
                            const IntVector& got = t.entries[i][j];
                            bool ok;
                            std::string want;
                            if (m.is_trivial() && n.is_trivial() && pres.is_orientable()) {
                                IntVector c = t.H2.coordinates(trivial_cup_oracle(res, 1, u, 1, v));
                                ok = got == c;
                                want = to_string(c);
                            } else {
                                // Mod-2 reduction is injective on Z/2 and
                                // surjective from Z when w* generates.
                                BigInt bit = mod2_cup_oracle(res, u, v);
                                BigInt c = got.empty() ? BigInt(0) : got[0];
                                c %= 2;
                                if (c < 0) c += 2;
                                ok = got.size() == 1 && t.w_coordinates && c == bit;
                                want = "parity " + bit.str();
                            }
                            if (!ok)
                                s.fail(pres.str() + " " + m.name() + "×" + n.name() + ": " +
                                       t.row_labels[i] + " ⌣ " + t.col_labels[j] + " = " +
                                       to_string(got) + ", oracle " + want);
                        }
                }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"cup_well_defined_and_graded", 0, {}};
        for (const auto& pres : surfaces) {
            Resolution res(pres);
            TensorElement d11 = opt.corrupt_delta11 ? corrupted_delta11(pres) : delta11_closed(pres);
            const auto mods = builtin_modules(pres);
            for (const auto& m : mods)
                for (const auto& n : mods) {
                    CochainComplex cm(res, m), cn(res, n);
                    CochainComplex ct(res, tensor(m, n));
                    AbelianGroup h2 = cokernel(ct.D2());
                    auto hm = cohomology_groups(cm).h1_basis();
                    auto hn = cohomology_groups(cn).h1_basis();
                    for (const auto& u : hm)
                        for (const auto& v : hn) {
                            ++s.cases;
                            auto uv = cup11(cm, cm.cochain(1, u.cocycle), cn, cn.cochain(1, v.cocycle), d11);
                            auto vu = cup11(cn, cn.cochain(1, v.cocycle), cm, cm.cochain(1, u.cocycle), d11);
                            IntVector swapped = swap_tensor_factors(vu.values, n.rank(), m.rank());
                            if (!h2.same_class(uv.values, BigInt(-1) * swapped))
                                s.fail(pres.str() + " " + m.name() + "×" + n.name() + ": [" + u.label +
                                       "⌣" + v.label + "] != -[" + v.label + "⌣" + u.label + "]");
                            IntVector shift = cm.D1() * IntVector{rng.uniform(-5, 5)};
                            auto shifted = cup11(cm, cm.cochain(1, u.cocycle + shift), cn,
                                                 cn.cochain(1, v.cocycle), d11);
                            if (!h2.same_class(uv.values, shifted.values))
                                s.fail(pres.str() + " " + m.name() + "×" + n.name() +
                                       ": coboundary shift changes [" + u.label + "⌣" + v.label + "]");
                        }
                }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"torus_bundles", 0, {}};
        for (const auto& pres : surfaces) {
            if (!pres.is_orientable()) continue;
            for (std::size_t k = 1; k <= 3; ++k) {
                ++s.cases;
                try {
                    auto c = classify_torus_bundles(trivial_module(pres, k));
                    if (!matches(c.via_cohomology, k, {})) s.fail(pres.str() + ": trivial rank " + std::to_string(k));
                } catch (const Error& e) {
                    s.fail(e.what());
                }
            }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"euler_characteristic", 0, {}};
        for (const auto& pres : surfaces)
            for (std::size_t k = 1; k <= 3; ++k) {
                ++s.cases;
                auto rep = cohomology_groups(trivial_module(pres, k));
                const long long alt = static_cast<long long>(rep.H0.free_rank) -
                                      static_cast<long long>(rep.H1.free_rank) +
                                      static_cast<long long>(rep.H2.free_rank);
                if (alt != static_cast<long long>(k) * pres.euler_characteristic())
                    s.fail(pres.str() + " rank " + std::to_string(k));
            }
        report.suites.push_back(std::move(s));
    }
    return report;
}

} // namespace surfcohom
