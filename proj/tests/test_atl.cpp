#include <gtest/gtest.h>

#include <random>

#include "pbr/atl.hpp"
#include "pbr/functors.hpp"

using namespace pbr;

namespace {

ATLElement H1() {
    return atl::from_polar(polar::H());
}

Q at(const RatFunc& f, const std::map<int, Poly>& b) {
    RatFunc v = f.substitute(b);
    EXPECT_TRUE(v.is_poly() && v.as_poly().is_constant()) << v.str();
    return v.as_poly().constant_term();
}

}  // namespace

TEST(Atl, Ranks) {
    auto rep = atl::rank_report(6);
    EXPECT_TRUE(rep.pass()) << rep.failures();
    EXPECT_EQ(atl::standard_basis(0, 2).size(), 2u);
    EXPECT_EQ(atl::standard_basis(2, 2).size(), 6u);
    EXPECT_EQ(atl::standard_basis(0, 0).size(), 1u);
    EXPECT_TRUE(atl::standard_basis(1, 2).empty());
}

TEST(Atl, Stratum) {
    // Hand count for 2N = 4: two matchings with outer arcs {2 arcs} and {1 arc}.
    EXPECT_EQ(atl::stratum_count(2, 0), 2);
    EXPECT_EQ(atl::stratum_count(2, 1), 3);
    EXPECT_EQ(atl::stratum_count(2, 2), 1);
}

TEST(Atl, HSquared) {
    ATLElement h = H1();
    ASSERT_EQ(h.terms().size(), 1u);
    ATLElement hh = atl::compose(h, h);
    ATLElement want = (-atl::c_coeff()) * h + atl::d_coeff() * ATLElement(ATLDiagram::identity(1));
    EXPECT_EQ(hh, want);
    EXPECT_EQ(atl::from_polar(polar::power(polar::H(), 2)), want);
}

TEST(Atl, ClosedPowers) {
    EXPECT_EQ(atl::from_polar(polar::Z(1)), ATLElement(0, 0));
    ATLElement z3 = atl::from_polar(polar::Z(3));
    EXPECT_EQ(z3.coeff(ATLDiagram::identity(0)), -(atl::c_coeff() * RatFunc(zvar(2))));
    EXPECT_EQ(atl::Z(2), RatFunc(zvar(2)));
    // 2 Z3 = (2 - delta) Z2
    EXPECT_EQ(RatFunc(2) * atl::Z(3), RatFunc(Poly(2) - delta()) * atl::Z(2));
}

TEST(Atl, CrossingImage) {
    ATLElement x = atl::from_brauer(BrauerDiagram::swap(2, 1));
    ATLElement want(ATLDiagram::identity(2), RatFunc(-1));
    want += ATLElement(ATLDiagram::from_brauer(BrauerDiagram::e(2, 1)), RatFunc(2).div_delta());
    EXPECT_EQ(x, want);
    ATLElement s1 = atl::from_brauer(BrauerDiagram::swap(3, 1)), s2 = atl::from_brauer(BrauerDiagram::swap(3, 2));
    EXPECT_EQ(atl::compose(s1, s1), ATLElement(ATLDiagram::identity(3)));
    // Braid relation holds only where (2/delta)^3 = 2/delta.
    ATLElement braid = atl::compose(s1, atl::compose(s2, s1)) - atl::compose(s2, atl::compose(s1, s2));
    EXPECT_FALSE(braid.is_zero());
    EXPECT_TRUE(braid.substitute({{var::delta, Poly(-2)}}).is_zero());
    EXPECT_TRUE(braid.substitute({{var::delta, Poly(2)}}).is_zero());
    EXPECT_FALSE(braid.substitute({{var::delta, Poly(3)}}).is_zero());
}

TEST(Atl, PolarRelatorsVanish) {
    for (int r = 1; r <= 3; ++r)
        for (auto& rel : polar::relation_suites(r)) {
            ATLElement v = atl::from_polar(rel.value).substitute({{var::delta, Poly(-2)}});
            EXPECT_TRUE(v.is_zero()) << rel.family << " " << rel.name << " -> " << v.str();
        }
}

TEST(Atl, LiftRoundTrip) {
    for (int n = 0; n <= 6; n += 2)
        for (int r = 0; r <= n; ++r)
            for (auto& d : atl::standard_basis(r, n - r)) EXPECT_EQ(atl::from_polar(atl::lift(d)), ATLElement(d)) << d.str();
}

TEST(Atl, Associativity) {
    std::mt19937 rng(17);
    auto pick = [&](int r, int s) {
        auto b = atl::standard_basis(r, s);
        return b[std::uniform_int_distribution<int>(0, b.size() - 1)(rng)];
    };
    for (int t = 0; t < 100; ++t) {
        int a = 1 + t % 2 * 2, b = 1 + (t / 2) % 3, c = 1 + (t / 6) % 2 * 2, d = 1 + (t / 12) % 3;
        if ((a + b) % 2) ++b;
        if ((b + c) % 2) ++c;
        if ((c + d) % 2) ++d;
        ATLElement x(pick(a, b)), y(pick(b, c)), z(pick(c, d));
        EXPECT_EQ(atl::compose(z, atl::compose(y, x)), atl::compose(atl::compose(z, y), x));
    }
}

TEST(Atl, Z2Central) {
    RatFunc z(zvar(2));
    for (int n = 2; n <= 4; n += 2)
        for (int r = 0; r <= n; ++r)
            for (auto& d : atl::standard_basis(r, n - r)) {
                ATLElement zl = atl::compose(ATLElement(d), atl::from_polar(tensor_right(polar::Z(2), brauer::id(r))));
                EXPECT_EQ(zl, z * ATLElement(d));
            }
}

TEST(Atl, TlbQuadratic) {
    Poly l = lambda();
    ATLElement h = H1(), id(ATLDiagram::identity(1));
    ATLElement a = h + RatFunc(l) * id;
    ATLElement b = h + (atl::c_coeff() - RatFunc(l)) * id;
    ATLElement q = atl::tlb_specialize(atl::compose(a, b), l);
    EXPECT_TRUE(q.is_zero()) << q.str();
    EXPECT_EQ(atl::tlb_z2(Poly(1)).substitute({{var::delta, Poly(-2)}}), Poly(-6));
    EXPECT_TRUE(atl::tlb_z2(Poly(0)).is_zero());
}

TEST(Atl, Sp2CompositionTables) {
    for (int l = 1; l <= 3; ++l) {
        FunctorContext ctx(modules::sp2_simple(l));
        std::map<int, Poly> b{{var::delta, Poly(-2)}, {var::z(2), Poly(ctx.z_value(2))}};
        auto image = [&](const ATLElement& e) {
            SMat out;
            bool first = true;
            for (auto& [d, c] : e.terms()) {
                SMat m = ctx.evaluate(atl::lift(d)).mat * at(c, b);
                out = first ? m : out + m;
                first = false;
            }
            return out;
        };
        for (auto [r, m, s] : {std::tuple{1, 1, 1}, {2, 2, 0}, {0, 2, 2}, {2, 0, 2}, {1, 3, 1}, {2, 2, 2}}) {
            for (auto& lo : atl::standard_basis(r, m))
                for (auto& up : atl::standard_basis(m, s)) {
                    ATLElement c = atl::compose(up, lo);
                    SMat lhs = ctx.evaluate(atl::lift(up)).mat * ctx.evaluate(atl::lift(lo)).mat;
                    if (c.is_zero()) {
                        EXPECT_TRUE(lhs.is_zero());
                        continue;
                    }
                    EXPECT_EQ(lhs, image(c)) << l << " " << up.str() << " o " << lo.str();
                }
        }
    }
}
