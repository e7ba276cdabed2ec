#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "pbr/functors.hpp"

using namespace pbr;

namespace {

std::vector<std::pair<int, int>> spaces() { return {{2, 0}, {3, 0}, {4, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 1}}; }

BrauerDiagram random_diagram(std::mt19937& rng, int r, int s) {
    std::vector<int> pts(r + s);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<int> p(r + s);
    for (int i = 0; i < r + s; i += 2) {
        p[pts[i]] = pts[i + 1];
        p[pts[i + 1]] = pts[i];
    }
    return BrauerDiagram(r, s, p);
}

PolarElement random_polar(std::mt19937& rng, int r) {
    PolarElement x = polar::I(r);
    std::uniform_int_distribution<int> kind(0, 2), strand(1, r);
    for (int k = 0; k < 3; ++k) {
        int c = kind(rng);
        if (c == 0) x = polar::H(r, 0, strand(rng)) * x;
        else x = polar::iota(random_diagram(rng, r, r)) * x;
    }
    return x + polar::H(r, 0, strand(rng));
}

}  // namespace

TEST(Functors, ModuleAxioms) {
    for (auto& M : modules::default_suite()) {
        auto rep = module_check(M);
        EXPECT_TRUE(rep.pass()) << rep.failures();
    }
    for (auto M : {modules::sp2_simple(0), modules::sp2_simple(5), modules::sp2_truncated_verma(Q(7, 3), 6),
                   modules::adjoint(3, 0), modules::adjoint(1, 1), modules::trivial(1, 1)}) {
        auto rep = module_check(M);
        EXPECT_TRUE(rep.pass()) << M.name << rep.failures();
    }
}

TEST(Functors, BrauerBasics) {
    for (auto [m, n] : spaces()) {
        SuperSpace V = build_space(m, n);
        SMat loop = evaluate_brauer(brauer::cap(2, 1) * brauer::cup(0, 1), V);
        Q v;
        ASSERT_TRUE(loop.is_scalar(&v));
        EXPECT_EQ(v, Q(V.sdim));
        auto s = super::structure_maps(V);
        EXPECT_EQ(evaluate_brauer(brauer::H(), V), s.tau - s.e);
        EXPECT_EQ(evaluate_brauer(brauer::id(3), V), SMat::identity(V.dim * V.dim * V.dim));
    }
}

TEST(Functors, BrauerFunctoriality) {
    std::mt19937 rng(11);
    for (auto [m, n] : {std::pair{2, 0}, {0, 1}, {1, 1}}) {
        SuperSpace V = build_space(m, n);
        for (int t = 0; t < 40; ++t) {
            int r = 1 + t % 3, k = r + 2 * (t % 2), s = (t % 3 == 0) ? k : k - 2 * (k > 1);
            if ((r + k) % 2 || (k + s) % 2) continue;
            auto a = random_diagram(rng, r, k), b = random_diagram(rng, k, s);
            auto c = compose(b, a);
            SMat with_loops = evaluate_brauer(c.d, V);
            for (int i = 0; i < c.loops; ++i) with_loops *= Q(V.sdim);
            EXPECT_EQ(with_loops, evaluate_brauer(b, V) * evaluate_brauer(a, V));
        }
    }
}

TEST(Functors, Quartet) {
    for (auto [m, n] : spaces())
        for (int r = 2; r <= 3; ++r) {
            auto rep = quartet_check(r, m, n);
            EXPECT_TRUE(rep.pass()) << rep.title << rep.failures();
        }
}

TEST(Functors, NaturalModuleFactorsThroughVarpi) {
    std::mt19937 rng(5);
    for (auto [m, n] : {std::pair{3, 0}, {0, 1}, {1, 1}}) {
        FunctorContext ctx(modules::natural(m, n));
        std::map<int, Poly> at{{var::delta, Poly(Q(ctx.space().sdim))}};
        for (int k = 0; k <= 5; ++k)
            if (k > 0) EXPECT_EQ(ctx.z_value(k), polar::varpi_z(k).substitute(at).constant_term()) << k;
        for (int t = 0; t < 20; ++t) {
            auto x = random_polar(rng, 1 + t % 3);
            EXPECT_EQ(ctx.evaluate(x).mat, evaluate_brauer(polar::varpi(x), ctx.space()));
        }
    }
}

TEST(Functors, Sp2SimpleMatchesNatural) {
    FunctorContext v(modules::natural(0, 1)), l1(modules::sp2_simple(1));
    for (int k = 2; k <= 6; k += 2) EXPECT_EQ(v.z_value(k), l1.z_value(k));
    Q x;
    ASSERT_TRUE((l1.connector(1, 1) * l1.connector(1, 1) - l1.connector(1, 1) * Q(2)).is_scalar(&x));
    EXPECT_EQ(x, Q(3));
}

TEST(Functors, ComposeRespectsEveryModule) {
    std::mt19937 rng(3);
    auto suite = modules::default_suite();
    suite.push_back(modules::sp2_truncated_verma(Q(1, 2), 8));
    for (auto& M : suite) {
        FunctorContext ctx(M);
        for (int t = 0; t < 12; ++t) {
            int r = 1 + t % 2;
            auto a = random_polar(rng, r), b = random_polar(rng, r);
            RepOperator lhs = ctx.evaluate(compose(b, a));
            RepOperator rhs = ctx.evaluate(b * a);
            RepOperator diff = rhs;
            diff.mat = lhs.mat - rhs.mat;
            diff.margin = M.truncated ? std::min(lhs.margin, rhs.margin) : -1;
            EXPECT_TRUE(is_zero_in_window(diff)) << M.name << " " << t;
        }
    }
}

TEST(Functors, CommutantProperty) {
    std::mt19937 rng(9);
    for (auto& M : modules::default_suite()) {
        FunctorContext ctx(M);
        for (int t = 0; t < 4; ++t) {
            int r = 1 + t % 2;
            SMat w = ctx.evaluate(random_polar(rng, r)).mat;
            for (int g = 0; g < ctx.lie().size(); ++g) {
                SMat d = ctx.diagonal_action(r, g);
                EXPECT_TRUE((w * d - d * w).is_zero()) << M.name << " generator " << g;
            }
        }
    }
}

TEST(Functors, SkewAndQuadraticImages) {
    for (auto& M : modules::default_suite()) {
        FunctorContext ctx(M);
        EXPECT_TRUE(ctx.evaluate(polar::transpose_power(1) + polar::H()).mat.is_zero()) << M.name;
        auto q = polar::transpose_power(2) - polar::power(polar::H(), 2) - (delta() - Poly(2)) * polar::H();
        EXPECT_TRUE(ctx.evaluate(q).mat.is_zero()) << M.name;
    }
}

TEST(Functors, RelatorsVanishOnOracleModules) {
    for (auto& M : modules::default_suite()) {
        FunctorContext ctx(M);
        for (int r = 1; r <= 3; ++r)
            for (auto& rel : polar::relation_suites(r))
                EXPECT_TRUE(ctx.evaluate(rel.value).mat.is_zero()) << M.name << " " << rel.family << " " << rel.name;
    }
}

TEST(Functors, OddZAgreesWithModules) {
    for (auto& M : modules::default_suite()) {
        FunctorContext ctx(M);
        for (int l = 3; l <= 7; l += 2) EXPECT_EQ(ctx.z_value(l), ctx.scalar(polar::odd_z_polynomial(l))) << M.name << l;
        EXPECT_EQ(ctx.z_value(1), Q(0));
        for (auto k : std::vector<std::vector<int>>{{2, 2}, {1, 3}, {2, 1, 1}})
            EXPECT_EQ(ctx.scalar(polar::z_word_reduce(k)), ctx.scalar(normalize(polar::Zword(k)).terms().begin()->second));
    }
}

TEST(Functors, ZWordAgainstDirectEvaluation) {
    for (auto& M : modules::default_suite()) {
        FunctorContext ctx(M);
        for (auto k : std::vector<std::vector<int>>{{2, 2}, {1, 2}, {3, 1}, {1, 1, 2}}) {
            Q direct;
            ASSERT_TRUE(ctx.evaluate(polar::Zword(k)).mat.is_scalar(&direct));
            EXPECT_EQ(direct, ctx.scalar(polar::z_word_reduce(k))) << M.name;
        }
    }
}

TEST(Functors, OracleVerdicts) {
    auto suite = modules::default_suite();
    auto h = polar::H(), ht = polar::transpose_power(1);
    EXPECT_TRUE(oracle_equal(h * ht, ht * h, suite).equal);
    auto z2 = tensor_right(polar::Z(2), brauer::id(1));
    EXPECT_TRUE(oracle_equal(z2 * h, h * z2, suite).equal);
    auto v = oracle_equal(h, -h, suite);
    EXPECT_FALSE(v.equal);
    EXPECT_NE(v.text.find("distinct"), std::string::npos);
}

TEST(Functors, CharacteristicRoots) {
    // so_m: tau - e has eigenvalues 1, -1 and 1 - m; on C^{0|2n} the cup line gives 1 + 2n.
    auto rep = char_identity_report(modules::natural(3, 0), {Q(1), Q(-1), Q(-2)});
    EXPECT_TRUE(rep.pass()) << rep.failures();
    rep = char_identity_report(modules::natural(5, 0), {Q(1), Q(-1), Q(-4)});
    EXPECT_TRUE(rep.pass()) << rep.failures();
    rep = char_identity_report(modules::natural(0, 2), {Q(1), Q(-1), Q(5)});
    EXPECT_TRUE(rep.pass()) << rep.failures();
    for (int l = 1; l <= 8; ++l) {
        rep = char_identity_report(modules::sp2_simple(l), {Q(-l), Q(l + 2)});
        EXPECT_TRUE(rep.pass()) << l << rep.failures();
    }
    EXPECT_TRUE(char_identity_numeric(modules::sp2_simple(0)).product_vanishes);
}

TEST(Functors, AtlFactorization) {
    auto rep = atl_factorization_check({0, 1, 2, 3});
    EXPECT_TRUE(rep.pass()) << rep.failures();
}

TEST(Functors, TruncationMargin) {
    FunctorContext ctx(modules::sp2_truncated_verma(Q(1, 2), 2));
    EXPECT_THROW(ctx.evaluate(polar::power(polar::H(), 3)), Error);
    EXPECT_THROW(ctx.z_value(4), Error);
}

TEST(Functors, TlbWitness) {
    for (Q l : {Q(1, 2), Q(7, 3), Q(5)})
        for (int t = 1; t <= 3; ++t) {
            auto rep = tlb_witness(t, l, t + 2);
            EXPECT_TRUE(rep.pass()) << rep.title << rep.failures();
        }
    EXPECT_THROW(tlb_witness(2, Q(1), 3), Error);
}
