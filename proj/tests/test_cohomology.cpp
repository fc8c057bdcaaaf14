#include <gtest/gtest.h>

#include "surfcohom/surfcohom.hpp"

using namespace surfcohom;

namespace {

const IntMatrix phi{{2, 1}, {1, 1}};
const auto torus = SurfacePresentation::orientable(1);
const auto klein = SurfacePresentation::nonorientable(2);

CoefficientModule phi_module() { return make_module(2, {{gen_a(1), phi}, {gen_b(1), phi}}, torus, "phi"); }

IntVector dual(const Resolution& res, BasisLabel l, long long c = 1) {
    IntVector v(res.p1_rank());
    v[res.p1_position(l)] = c;
    return v;
}

bool is_type(const AbelianGroup& g, std::size_t free_rank, std::vector<BigInt> torsion) {
    return g.free_rank == free_rank && g.torsion == torsion;
}

} // namespace

TEST(CochainComplex, Matrices) {
    Resolution rt(torus);
    CochainComplex z(rt, trivial_module(torus));
    EXPECT_EQ(z.D1(), IntMatrix(2, 1));
    EXPECT_EQ(z.D2(), IntMatrix(1, 2));
    Resolution rk(klein);
    CochainComplex t0(rk, trivial_module(klein));
    EXPECT_EQ(t0.D1(), IntMatrix(2, 1));
    EXPECT_EQ(t0.D2(), (IntMatrix{{2, 2}}));
    CochainComplex f(rt, phi_module());
    IntMatrix b = phi - IntMatrix::identity(2);
    EXPECT_EQ(f.D1(), vstack({b, b}, 2));
    EXPECT_TRUE((f.D2() * f.D1()).is_zero());
}

TEST(Cohomology, Examples) {
    auto t = cohomology_groups(trivial_module(torus));
    EXPECT_TRUE(is_type(t.H0, 1, {}));
    EXPECT_TRUE(is_type(t.H1, 2, {}));
    EXPECT_TRUE(is_type(t.H2, 1, {}));
    auto k = cohomology_groups(trivial_module(klein));
    EXPECT_TRUE(is_type(k.H0, 1, {}));
    EXPECT_TRUE(is_type(k.H1, 1, {}));
    EXPECT_TRUE(is_type(k.H2, 0, {2}));
    auto f = cohomology_groups(phi_module());
    EXPECT_TRUE(f.H0.is_trivial());
    EXPECT_TRUE(f.H1.is_trivial());
    EXPECT_TRUE(f.H2.is_trivial());
}

TEST(Cohomology, NamedGenerators) {
    auto k = cohomology_groups(trivial_module(klein));
    ASSERT_EQ(k.h1_named.size(), 1u);
    EXPECT_EQ(k.h1_named[0].label, "y1*-y2*");
    EXPECT_EQ(k.h1_named[0].cocycle, (IntVector{1, -1}));
    auto zt = cohomology_groups(builtin_module(torus, "Ztilde"));
    EXPECT_TRUE(is_type(zt.H1, 0, {2}));
    ASSERT_EQ(zt.h1_named.size(), 1u);
    EXPECT_EQ(zt.h1_named[0].label, "z1*");
    EXPECT_EQ(zt.H1.coordinates(zt.h1_named[0].cocycle), IntVector{1});
}

TEST(Cohomology, GeneratorsAreCocycles) {
    Rng rng(41);
    for (auto p : surfaces_up_to(3))
        for (int i = 0; i < 4; ++i) {
            auto m = random_module(rng, p, static_cast<std::size_t>(rng.uniform(1, 3)));
            CochainComplex cx(Resolution(p), m);
            auto rep = cohomology_groups(cx);
            for (const auto& g : rep.H0.generators) ASSERT_TRUE(is_zero(cx.D1() * g));
            for (const auto& g : rep.H1.generators) ASSERT_TRUE(is_zero(cx.D2() * g));
        }
}

TEST(Cohomology, EulerCharacteristic) {
    for (auto p : surfaces_up_to(5))
        for (std::size_t k = 1; k <= 3; ++k) {
            auto rep = cohomology_groups(trivial_module(p, k));
            long long alt = static_cast<long long>(rep.H0.free_rank) - static_cast<long long>(rep.H1.free_rank) +
                            static_cast<long long>(rep.H2.free_rank);
            EXPECT_EQ(alt, static_cast<long long>(k) * p.euler_characteristic()) << p.str();
        }
}

TEST(Lyndon, AgreesWithComplex) {
    EXPECT_TRUE(is_type(h2_lyndon(trivial_module(SurfacePresentation::nonorientable(3))), 0, {2}));
    EXPECT_TRUE(is_type(h2_lyndon(trivial_module(torus)), 1, {}));
    EXPECT_TRUE(h2_lyndon(phi_module()).is_trivial());
    Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        auto p = rng.coin() ? SurfacePresentation::orientable(static_cast<int>(rng.uniform(1, 3)))
                            : SurfacePresentation::nonorientable(static_cast<int>(rng.uniform(2, 4)));
        auto m = random_module(rng, p, static_cast<std::size_t>(rng.uniform(1, 3)));
        ASSERT_TRUE(h2_lyndon(m).isomorphic(cohomology_groups(m).H2)) << p.str();
    }
}

TEST(Cup, Examples) {
    Resolution rt(torus);
    CochainComplex z(rt, trivial_module(torus));
    auto y = z.cochain(1, dual(rt, BasisLabel::y(1)));
    auto zz = z.cochain(1, dual(rt, BasisLabel::z(1)));
    EXPECT_EQ(cup11(z, y, z, zz).values, IntVector{1});
    EXPECT_EQ(cup11(z, y, z, y).values, IntVector{0});

    Resolution rk(klein);
    auto t1 = builtin_module(klein, "theta1");
    CochainComplex c1(rk, t1);
    auto y1 = c1.cochain(1, dual(rk, BasisLabel::y(1)));
    auto sq = cup11(c1, y1, c1, y1);
    AbelianGroup h2 = cokernel(CochainComplex(rk, tensor(t1, t1)).D2());
    EXPECT_TRUE(is_type(h2, 0, {2}));
    EXPECT_EQ(h2.coordinates(sq.values), h2.coordinates(IntVector{1}));
}

TEST(Cup, RejectsNonCocycles) {
    Resolution rk(klein);
    CochainComplex c(rk, trivial_module(klein));
    auto bad = c.cochain(1, dual(rk, BasisLabel::y(1)));
    auto good = c.cochain(1, IntVector{1, -1});
    EXPECT_THROW(cup11(c, bad, c, good), NotACocycle);
    EXPECT_THROW(cup11(c, good, c, bad), NotACocycle);
    EXPECT_NO_THROW(cup11(c, good, c, good));
}

TEST(Cup, TrivialCoefficientFormula) {
    Rng rng(43);
    for (int n = 1; n <= 4; ++n) {
        auto p = SurfacePresentation::orientable(n);
        Resolution res(p);
        for (std::size_t km = 1; km <= 2; ++km)
            for (std::size_t kn = 1; kn <= 2; ++kn) {
                CochainComplex cm(res, trivial_module(p, km)), cn(res, trivial_module(p, kn));
                for (int t = 0; t < 10; ++t) {
                    IntVector u(res.p1_rank() * km), v(res.p1_rank() * kn);
                    for (auto& x : u) x = rng.uniform(-6, 6);
                    for (auto& x : v) x = rng.uniform(-6, 6);
                    auto got = cup11(cm, cm.cochain(1, u), cn, cn.cochain(1, v));
                    ASSERT_EQ(got.values, trivial_cup_oracle(res, km, u, kn, v));
                }
            }
    }
}

TEST(Cup, RecursiveAndClosedDiagonalsGiveTheSameProducts) {
    for (auto p : surfaces_up_to(3)) {
        Resolution res(p);
        TensorElement rec = delta11_recursive(res);
        for (const auto& m : builtin_modules(p))
            for (const auto& n : builtin_modules(p)) {
                CochainComplex cm(res, m), cn(res, n);
                auto a = cup_table(cm, cn, rec);
                auto b = cup_table(cm, cn, delta11_closed(p));
                EXPECT_EQ(a.entries, b.entries);
            }
    }
}

TEST(Cup, Mod2ReductionOracle) {
    // Rank-1 tables: the class modulo 2 is the mod-2 intersection pairing.
    for (auto p : surfaces_up_to(4)) {
        Resolution res(p);
        for (const auto& m : builtin_modules(p))
            for (const auto& n : builtin_modules(p)) {
                auto t = cup_table(CochainComplex(res, m), CochainComplex(res, n), delta11_closed(p));
                ASSERT_TRUE(t.w_coordinates.has_value());
                for (std::size_t i = 0; i < t.row_cocycles.size(); ++i)
                    for (std::size_t j = 0; j < t.col_cocycles.size(); ++j) {
                        BigInt c = t.entries[i][j].at(0) % 2;
                        if (c < 0) c += 2;
                        EXPECT_EQ(c, mod2_cup_oracle(res, t.row_cocycles[i], t.col_cocycles[j]))
                            << p.str() << " " << m.name() << "x" << n.name() << " " << t.row_labels[i] << " "
                            << t.col_labels[j];
                    }
            }
    }
}

TEST(Cup, CoboundaryShiftAndGradedCommutativity) {
    Rng rng(44);
    for (auto p : surfaces_up_to(3)) {
        Resolution res(p);
        for (int t = 0; t < 3; ++t) {
            auto m = random_module(rng, p, static_cast<std::size_t>(rng.uniform(1, 2)));
            auto n = random_module(rng, p, static_cast<std::size_t>(rng.uniform(1, 2)));
            CochainComplex cm(res, m), cn(res, n), cmn(res, tensor(m, n));
            auto h1m = cohomology_groups(cm).H1, h1n = cohomology_groups(cn).H1;
            AbelianGroup h2 = cokernel(cmn.D2());
            for (const auto& u : h1m.generators)
                for (const auto& v : h1n.generators) {
                    auto uv = cup11(cm, cm.cochain(1, u), cn, cn.cochain(1, v));
                    IntVector mshift(m.rank()), nshift(n.rank());
                    for (auto& x : mshift) x = rng.uniform(-4, 4);
                    for (auto& x : nshift) x = rng.uniform(-4, 4);
                    auto shifted = cup11(cm, cm.cochain(1, u + cm.D1() * mshift), cn,
                                         cn.cochain(1, v + cn.D1() * nshift));
                    ASSERT_TRUE(h2.same_class(uv.values, shifted.values));
                    auto vu = cup11(cn, cn.cochain(1, v), cm, cm.cochain(1, u));
                    ASSERT_TRUE(h2.same_class(uv.values,
                                              BigInt(-1) * swap_tensor_factors(vu.values, n.rank(), m.rank())));
                }
        }
    }
}

TEST(CupWithH0, UnitAndScaling) {
    Resolution rt(torus);
    CochainComplex z(rt, trivial_module(torus));
    auto y = z.cochain(1, dual(rt, BasisLabel::y(1)));
    EXPECT_EQ(cup_with_h0(z, IntVector{1}, y).values, y.values);
    EXPECT_EQ(cup_with_h0(z, IntVector{2}, y).values, dual(rt, BasisLabel::y(1), 2));
    CochainComplex zt(rt, builtin_module(torus, "Ztilde"));
    EXPECT_TRUE(cohomology_groups(zt).H0.is_trivial());
    EXPECT_THROW(cup_with_h0(zt, IntVector{1}, y), NotInvariant);
}

TEST(CupTable, OrientableSymplectic) {
    auto p = SurfacePresentation::orientable(2);
    auto t = cup_table(trivial_module(p), trivial_module(p));
    ASSERT_EQ(t.row_labels, (std::vector<std::string>{"y1*", "y2*", "z1*", "z2*"}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::string want = "0";
            if (i < 2 && j == i + 2) want = "[w*]";
            if (i >= 2 && j == i - 2) want = "-[w*]";
            EXPECT_EQ(t.describe(i, j), want) << t.row_labels[i] << " " << t.col_labels[j];
        }
}

TEST(CupTable, NonOrientableTheta0) {
    for (int n = 3; n <= 5; ++n) {
        auto p = SurfacePresentation::nonorientable(n);
        auto t = cup_table(trivial_module(p, 1, "theta0"), trivial_module(p, 1, "theta0"));
        for (std::size_t k = 0; k < t.row_labels.size(); ++k)
            for (std::size_t l = 0; l < t.col_labels.size(); ++l) {
                const bool adjacent = k + 1 == l || l + 1 == k;
                EXPECT_EQ(t.describe(k, l), adjacent ? "[w*]" : "0") << n << " " << k << " " << l;
            }
    }
}

TEST(Bundles, Classification) {
    for (int n = 1; n <= 3; ++n) {
        auto p = SurfacePresentation::orientable(n);
        for (std::size_t k = 1; k <= 3; ++k) {
            auto c = classify_torus_bundles(trivial_module(p, k));
            EXPECT_TRUE(is_type(c.via_cohomology, k, {}));
            EXPECT_TRUE(is_type(c.direct, k, {}));
        }
    }
    EXPECT_TRUE(classify_torus_bundles(phi_module()).via_cohomology.is_trivial());
    auto c = classify_torus_bundles(builtin_module(torus, "Ztilde"));
    EXPECT_TRUE(is_type(c.direct, 0, {2}));
    for (int n = 2; n <= 4; ++n) {
        auto p = SurfacePresentation::nonorientable(n);
        for (const auto& m : builtin_modules(p)) EXPECT_NO_THROW(classify_torus_bundles(m)) << p.str();
    }
}
