#include <gtest/gtest.h>

#include "pbr/expr.hpp"

using namespace pbr;

TEST(Expr, SquareOfH) {
    auto v = expr::evaluate("h(1) ; h(1)");
    EXPECT_EQ(v.polar, polar::power(polar::H(), 2));
    EXPECT_FALSE(v.brauer.has_value());
}

TEST(Expr, ClosedLoop) {
    auto v = expr::evaluate("cap(1) ; h(1)*id(1) ; cup(1)");
    EXPECT_EQ(v.polar.r(), 0);
    EXPECT_EQ(v.polar.s(), 0);
    EXPECT_EQ(polar::varpi(v.polar), polar::varpi(polar::Z(1)));
    EXPECT_TRUE(normalize(v.polar).is_zero());
}

TEST(Expr, BrauerWords) {
    EXPECT_EQ(*expr::evaluate("x(1) ; x(1)").brauer, brauer::id(2));
    EXPECT_EQ(*expr::evaluate("cap(1) ; cup(1)").brauer, delta() * brauer::id(0));
    auto v = expr::evaluate("x(1) + id(2) - 1/2 cup(1) ; cap(1)");
    EXPECT_EQ(*v.brauer, brauer::s(2, 1) + brauer::id(2) - Poly(Q(1, 2)) * brauer::e(2, 1));
    EXPECT_EQ(*expr::evaluate("id(1)*x(1)").brauer, brauer::s(3, 2));
}

TEST(Expr, RoundTrip) {
    for (std::string s : {"h(1) ; h(1)", "cap(1) ; h(1)*id(1) ; cup(1)", "x(1) + id(2) - 1/2 cup(1) ; cap(1)",
                          "-(h(1) + z(2)*id(1)) ; x(1)*id(0)", "3 (x(1) ; x(1))", "(2 h(1)) ; h(1)", "z(4)",
                          "(h(2) - h(1)*id(1)) * id(1)"}) {
        auto a = expr::parse(s);
        auto b = expr::parse(expr::render(a));
        EXPECT_TRUE(expr::same(a, b)) << s << " -> " << expr::render(a);
        EXPECT_EQ(expr::render(a), expr::render(b));
    }
}

TEST(Expr, Errors) {
    try {
        expr::evaluate("h(1) ; id(2)");
        FAIL();
    } catch (const expr::ParseError& e) {
        EXPECT_EQ(e.span().begin, 7);
        EXPECT_EQ(e.span().end, 12);
    }
    EXPECT_THROW(expr::parse("foo(1)"), expr::ParseError);
    EXPECT_THROW(expr::parse("h(1"), expr::ParseError);
    EXPECT_THROW(expr::parse("h(1) )"), expr::ParseError);
    EXPECT_THROW(expr::evaluate("x(1) * h(1)"), expr::ParseError);
    EXPECT_THROW(expr::evaluate("x(1) + id(3)"), expr::ParseError);
    EXPECT_THROW(expr::parse("1/0 h(1)"), expr::ParseError);
    EXPECT_EQ(expr::pointer("h(1) ; id(2)", {7, 12}), "h(1) ; id(2)\n       ^^^^^");
}
