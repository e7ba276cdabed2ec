#include <gtest/gtest.h>

#include "pbr/linalg.hpp"

using namespace pbr;

TEST(Linalg, CharpolyTriangular) {
    DMat a = {{Q(2), Q(1), Q(0)}, {Q(0), Q(3), Q(5)}, {Q(0), Q(0), Q(-1)}};
    // (x-2)(x-3)(x+1) = x^3 - 4x^2 + x + 6
    EXPECT_EQ(dense::charpoly(a), (std::vector<Q>{Q(6), Q(1), Q(-4), Q(1)}));
}

TEST(Linalg, CharpolyConjugateInvariant) {
    DMat a = {{Q(1), Q(2)}, {Q(3), Q(4)}};
    DMat p = {{Q(1), Q(1)}, {Q(0), Q(1)}};
    DMat b = dense::mul(dense::mul(p, a), dense::inverse(p));
    EXPECT_EQ(dense::charpoly(a), dense::charpoly(b));
    EXPECT_EQ(dense::charpoly(a), (std::vector<Q>{Q(-2), Q(-5), Q(1)}));
}

TEST(Linalg, RationalRoots) {
    // 2(x-1)^2 (x+1/2) (x^2+1) expanded.
    std::vector<Q> p = {Q(1), Q(0), Q(-2), Q(2), Q(-3), Q(2)};
    std::vector<Q> rest;
    auto r = dense::rational_roots(p, &rest);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0], (std::pair<Q, int>{Q(-1, 2), 1}));
    EXPECT_EQ(r[1], (std::pair<Q, int>{Q(1), 2}));
    EXPECT_EQ(rest, (std::vector<Q>{Q(2), Q(0), Q(2)}));
}

TEST(Linalg, RationalRootsWithZero) {
    auto r = dense::rational_roots({Q(0), Q(0), Q(-4), Q(1)});
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0], (std::pair<Q, int>{Q(0), 2}));
    EXPECT_EQ(r[1], (std::pair<Q, int>{Q(4), 1}));
}
