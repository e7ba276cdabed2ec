#include <gtest/gtest.h>

#include <random>

#include "pbr/functors.hpp"
#include "pbr/uea.hpp"

using namespace pbr;

namespace {

DMat mat2(int a, int b, int c, int d) { return {{Q(a), Q(b)}, {Q(c), Q(d)}}; }

std::vector<int> random_word(std::mt19937& rng, int gens, int len) {
    std::uniform_int_distribution<int> g(0, gens - 1);
    std::vector<int> w(len);
    for (auto& x : w) x = g(rng);
    return w;
}

DMat word_image(const std::vector<int>& w, const std::vector<DMat>& act) {
    DMat p = dense::identity(act[0].size());
    for (int g : w) p = dense::mul(p, act[g]);
    return p;
}

}  // namespace

TEST(Uea, Sp2Commutator) {
    UEA U(0, 1);
    UEAElement T = U.from_matrix(mat2(1, 0, 0, -1)), X = U.from_matrix(mat2(0, 1, 0, 0)),
               Y = U.from_matrix(mat2(0, 0, 1, 0));
    EXPECT_EQ(U.mul(Y, X), U.mul(X, Y) - T);
    EXPECT_EQ(U.bracket(T, X), Q(2) * X);
    EXPECT_EQ(U.bracket(T, Y), Q(-2) * Y);
    // C = -2(T^2/2 + XY + YX)
    EXPECT_EQ(U.casimir(), Q(-2) * (Q(1, 2) * U.mul(T, T) + U.mul(X, Y) + U.mul(Y, X)));
}

TEST(Uea, SquareOfEvenGenerator) {
    UEA U(3, 0);
    EXPECT_EQ(U.straighten({1, 1}), UEAElement({1, 1}, Q(1)));
    EXPECT_EQ(U.straighten({2, 0}).terms().size(), 2u);
}

TEST(Uea, OddSquaresHalfBracket) {
    UEA U(1, 1);
    for (int g = 0; g < U.gens(); ++g) {
        if (!U.lie().par[g]) continue;
        UEAElement sq = U.straighten({g, g});
        EXPECT_EQ(Q(2) * sq, U.bracket(U.gen(g), U.gen(g)));
        EXPECT_LE(sq.degree(), 1);
    }
}

TEST(Uea, AssociativityAndOrderIndependence) {
    std::mt19937 rng(23);
    for (auto [m, n] : {std::pair{3, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
        UEA U(m, n);
        for (int t = 0; t < 25; ++t) {
            auto u = random_word(rng, U.gens(), 1 + t % 3), v = random_word(rng, U.gens(), 1 + (t / 3) % 3);
            std::vector<int> uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            EXPECT_EQ(U.straighten(uv), U.mul(U.straighten(u), U.straighten(v)));
            // Left to right accumulation versus right to left.
            UEAElement r(Q(1));
            for (int i = (int)uv.size() - 1; i >= 0; --i) r = U.mul(U.gen(uv[i]), r);
            EXPECT_EQ(U.straighten(uv), r);
        }
    }
}

TEST(Uea, RepresentationHomomorphism) {
    std::mt19937 rng(29);
    for (auto M : {modules::natural(3, 0), modules::natural(1, 1), modules::adjoint(0, 1), modules::sp2_simple(3),
                   modules::natural(2, 1)}) {
        UEA U(M.m, M.n);
        for (int t = 0; t < 20; ++t) {
            auto w = random_word(rng, U.gens(), 2 + t % 4);
            EXPECT_EQ(U.represent(U.straighten(w), M.act), word_image(w, M.act)) << M.name;
        }
    }
}

TEST(Uea, EMatrixOnNatural) {
    for (auto [m, n] : {std::pair{2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}}) {
        UEA U(m, n);
        const SuperSpace& V = U.space();
        TensorSpace T = TensorSpace::power(V, 2);
        UMatrix e = U.e_matrix();
        std::vector<DMat> act = U.lie().mats;
        SMat total(T.dim(), T.dim());
        for (int b = 0; b < V.dim; ++b)
            for (int a = 0; a < V.dim; ++a) {
                int p = super::parity(V, a, b);
                total += T.slot(0, U.represent(e[b][a], act), p) * T.slot(1, super::unit(V, b, a), p);
            }
        EXPECT_EQ(total, super::t_action(T, V, 0, 1)) << m << " " << n;
        UEAElement str;
        for (int a = 0; a < V.dim; ++a) str += e[a][a];
        if (n == 0) EXPECT_TRUE(str.is_zero());
    }
}

TEST(Uea, Sp2EMatrix) {
    UEA U(0, 1);
    UEAElement T = U.from_matrix(mat2(1, 0, 0, -1)), X = U.from_matrix(mat2(0, 1, 0, 0)),
               Y = U.from_matrix(mat2(0, 0, 1, 0));
    UMatrix e = U.e_matrix();
    // -2 (T/2 (x) diag(1,-1) + X (x) E_10 + Y (x) E_01)
    EXPECT_EQ(e[0][0], -T);
    EXPECT_EQ(e[1][1], T);
    EXPECT_EQ(e[1][0], Q(-2) * X);
    EXPECT_EQ(e[0][1], Q(-2) * Y);
}

TEST(Uea, TRecursionIsEPower) {
    for (auto [m, n] : {std::pair{3, 0}, {0, 1}, {1, 1}}) {
        UEA U(m, n);
        const SuperSpace& V = U.space();
        UMatrix e = U.e_matrix(), p = e;
        for (int k = 2; k <= 3; ++k) {
            p = U.mat_mul(p, e);
            UMatrix t = U.t_power(k);
            for (int b = 0; b < V.dim; ++b)
                for (int a = 0; a < V.dim; ++a)
                    EXPECT_EQ(p[b][a], Q(V.par[b] ? -1 : 1) * t[a][b]) << m << n << " k=" << k;
        }
    }
}

TEST(Uea, FzLowOrders) {
    for (auto [m, n] : {std::pair{3, 0}, {0, 1}, {1, 1}, {2, 1}}) {
        UEA U(m, n);
        EXPECT_TRUE(U.fz(1).is_zero());
        EXPECT_EQ(U.fz(2), Q(2) * U.casimir());
        Q delta(U.space().sdim);
        EXPECT_EQ(Q(2) * U.fz(3), (Q(2) - delta) * U.fz(2)) << m << " " << n;
    }
    UEA sp2(0, 1);
    EXPECT_EQ(sp2.fz(3), Q(2) * sp2.fz(2));
}

TEST(Uea, FzMatchesPolarFunctor) {
    for (auto M : {modules::natural(3, 0), modules::natural(0, 1), modules::natural(1, 1), modules::adjoint(3, 0),
                   modules::adjoint(0, 1), modules::sp2_simple(2), modules::sp2_simple(4)}) {
        UEA U(M.m, M.n);
        FunctorContext ctx(M);
        for (int l = 2; l <= 4; ++l) {
            DMat img = U.represent(U.fz(l), M.act);
            DMat want = dense::identity(M.dim);
            for (auto& row : want)
                for (auto& x : row) x *= ctx.z_value(l);
            EXPECT_EQ(img, want) << M.name << " l=" << l;
        }
    }
}

TEST(Uea, Centrality) {
    for (auto [m, n] : {std::pair{3, 0}, {0, 1}, {1, 1}}) {
        auto rep = uea::centrality_suite(m, n, 4);
        EXPECT_TRUE(rep.pass()) << m << " " << n << " " << rep.failures();
    }
    UEA U(3, 0);
    EXPECT_FALSE(U.centrality_check(U.gen(0), "J").pass());
}

TEST(Uea, Sp2CharacteristicIdentity) {
    auto rep = uea::sp2_characteristic_identity();
    EXPECT_TRUE(rep.pass()) << rep.failures();
    UEA U(0, 1);
    UMatrix r = uea::sp2_char_residual(U, Q(2));
    for (int l = 0; l <= 8; ++l) {
        Module L = modules::sp2_simple(l);
        for (auto& row : r)
            for (auto& x : row) EXPECT_TRUE(dense::is_zero(U.represent(x, L.act))) << l;
    }
}

TEST(Uea, UnsignedRecursionOnlyForPureCases) {
    for (auto [m, n] : {std::pair{3, 0}, {0, 1}}) {
        UEA U(m, n);
        for (int l = 2; l <= 3; ++l) EXPECT_EQ(U.fz(l, false), U.fz(l, true));
    }
    UEA U(1, 1);
    EXPECT_NE(U.fz(2, false), U.fz(2, true));
    EXPECT_FALSE(U.centrality_check(U.fz(2, false), "unsigned").pass());
}
