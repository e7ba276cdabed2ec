#include <gtest/gtest.h>

#include <random>

#include "pbr/polar.hpp"

using namespace pbr;

namespace {

Poly h() { return Poly::var(var::h); }

BrauerElement varpi_norm(const PolarElement& e) { return polar::varpi(normalize(e)); }

}  // namespace

TEST(Polar, HtTransposeLowOrders) {
    EXPECT_EQ(polar::ht_transpose_poly(0), Poly(1));
    EXPECT_EQ(polar::ht_transpose_poly(1), -h());
    EXPECT_EQ(polar::eliminate_odd_z(polar::ht_transpose_poly(2)), h() * h() + (delta() - Poly(2)) * h());
    EXPECT_EQ(polar::eliminate_odd_z(polar::ht_transpose_poly(3)),
              -h().pow(3) + (Poly(2) - Poly(2) * delta()) * h() * h() - (delta() - Poly(2)) * (delta() - Poly(1)) * h() +
                  zvar(2));
}

TEST(Polar, OddZThree) {
    EXPECT_EQ(polar::odd_z_polynomial(1), Poly());
    EXPECT_EQ(polar::odd_z_polynomial(3), (Poly(2) - delta()) * zvar(2) * Q(1, 2));
}

TEST(Polar, EvenClosureConsistent) {
    // Closing the transpose recursion reproduces z_l once odd z's are eliminated.
    for (int l = 2; l <= 7; ++l) {
        Poly c = polar::eliminate_odd_z(polar::close_h(polar::ht_transpose_poly(l)) - zvar(l));
        EXPECT_TRUE(c.is_zero()) << l << ": " << c.str();
    }
}

TEST(Polar, LoopWords) {
    Poly z4 = zvar(4), z2 = zvar(2);
    Poly z3 = polar::odd_z_polynomial(3);
    EXPECT_EQ(polar::z_word_reduce({2, 2}), z4 + (delta() - Poly(2)) * z3);
    for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(polar::z_word_reduce({1, k}), polar::eliminate_odd_z(-zvar(1 + k))) << k;
    EXPECT_EQ(polar::z_word_reduce({3}), z3);
    (void)z2;
}

TEST(Polar, NormalizedLoopsAreScalars) {
    for (auto k : std::vector<std::vector<int>>{{2}, {3}, {4}, {1, 1}, {2, 2}, {1, 2, 1}, {2, 1, 3}}) {
        PolarElement n = normalize(polar::Zword(k));
        ASSERT_EQ(n.terms().size(), 1u);
        EXPECT_TRUE(n.terms().begin()->first.layers().empty());
        EXPECT_EQ(n.terms().begin()->second, polar::z_word_reduce(k));
    }
}

TEST(Polar, VarpiOfZ) {
    EXPECT_TRUE(polar::varpi_z(1).is_zero());
    for (int k = 0; k <= 5; ++k) {
        BrauerElement v = polar::varpi(polar::Z(k));
        EXPECT_EQ(v.coeff(BrauerDiagram::identity(1)), k == 0 ? delta() : polar::varpi_z(k));
    }
}

TEST(Polar, NormalizePreservesVarpi) {
    std::vector<PolarElement> xs;
    for (int r = 1; r <= 3; ++r) {
        for (int j = 1; j <= r; ++j) {
            auto a = polar::H(r, 0, j);
            xs.push_back(a * a * a);
            for (int i = 1; i <= r; ++i) xs.push_back(a * polar::H(r, 0, i) * a);
        }
        if (r >= 2) {
            auto e1 = polar::iota(brauer::e(r, 1));
            auto t = polar::Theta(r, 2);
            xs.push_back(e1 * t * t * e1);
            xs.push_back(e1 * polar::H(r, 0, 1) * polar::iota(brauer::s(r, 1)) * polar::H(r, 0, 1) * e1);
        }
    }
    xs.push_back(polar::transpose_power(3));
    xs.push_back(polar::Zword({2, 1, 2}));
    for (auto& x : xs) {
        PolarElement n = normalize(x);
        EXPECT_TRUE(polar::varpi(n) == polar::varpi(x)) << x.str();
        EXPECT_TRUE(normalize(n) == n) << n.str();
        for (auto& [w, c] : n.terms()) {
            (void)c;
            for (auto& l : w.layers())
                if (auto cl = std::get_if<ConnectorLayer>(&l)) EXPECT_EQ(cl->attach, 1);
        }
    }
}

TEST(Polar, RelatorsVanish) {
    for (int r = 1; r <= 3; ++r)
        for (auto& rel : polar::relation_suites(r)) {
            EXPECT_TRUE(polar::varpi(rel.value).is_zero()) << rel.family << " " << rel.name;
            PolarElement n = normalize(rel.value);
            EXPECT_TRUE(polar::varpi(n).is_zero()) << rel.family << " " << rel.name;
            EXPECT_LE(n.max_order(), rel.value.max_order());
        }
}

TEST(Polar, RelatorsVanishR4) {
    for (auto& rel : polar::relation_suites(4, 3))
        EXPECT_TRUE(polar::varpi(normalize(rel.value)).is_zero()) << rel.family << " " << rel.name;
}

TEST(Polar, VarpiFunctorOnRandomPairs) {
    std::mt19937 rng(7);
    auto gen = [&](int r) {
        std::uniform_int_distribution<int> pick(0, 3);
        PolarElement x = polar::I(r);
        for (int k = 0; k < 3; ++k) {
            int c = pick(rng);
            std::uniform_int_distribution<int> strand(1, r);
            if (c == 0) x = polar::H(r, 0, strand(rng)) * x;
            else if (c == 1 && r > 1) x = polar::iota(brauer::e(r, std::uniform_int_distribution<int>(1, r - 1)(rng))) * x;
            else if (c == 2 && r > 1) x = polar::iota(brauer::s(r, std::uniform_int_distribution<int>(1, r - 1)(rng))) * x;
            else x = (delta() * x) + polar::H(r, 0, strand(rng)) * x;
        }
        return x;
    };
    for (int t = 0; t < 200; ++t) {
        int r = 1 + t % 3;
        PolarElement a = gen(r), b = gen(r);
        EXPECT_TRUE(polar::varpi(compose(b, a)) == polar::varpi(b) * polar::varpi(a)) << t;
    }
}

TEST(Polar, ComposeExamples) {
    auto A = polar::iota(brauer::e(3, 1)), B = polar::iota(brauer::s(3, 2));
    EXPECT_EQ(compose(polar::I(3), A), normalize(A));
    EXPECT_EQ(compose(B, A), polar::iota(brauer::s(3, 2) * brauer::e(3, 1)));
    EXPECT_EQ(compose(polar::Pi(), polar::Coprod()), delta() * polar::I(0));
    EXPECT_TRUE(normalize(polar::Z(1)).is_zero());
    EXPECT_EQ(tensor_right(polar::H(), brauer::id(2)), polar::H(3, 0, 1));
    PolarElement hi(PolarWord(1, {ConnectorLayer{1, 1}, BrauerDiagram::identity(1)}));
    EXPECT_EQ(normalize(hi), polar::H());
}

TEST(Polar, ArityChecks) {
    EXPECT_THROW(PolarWord(2, {ConnectorLayer{3, 1}}), Error);
    EXPECT_THROW(polar::H(2, 0, 3), Error);
    EXPECT_THROW(polar::H() * polar::H(3, 0, 1), Error);
}
