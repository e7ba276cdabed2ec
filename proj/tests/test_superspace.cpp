#include <gtest/gtest.h>

#include "pbr/superspace.hpp"

using namespace pbr;

namespace {
const std::vector<std::pair<int, int>> kSpaces = {{2, 0}, {3, 0}, {4, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 1}};
}

TEST(Superspace, KeyLemma) {
    for (auto [m, n] : kSpaces) {
        auto r = super::key_lemma_check(build_space(m, n));
        for (auto& c : r.checks) EXPECT_TRUE(c.pass) << r.title << ": " << c.name << " " << c.detail;
    }
}

TEST(Superspace, Casimir) {
    for (auto [m, n] : kSpaces) {
        auto r = super::casimir_eigen_check(build_space(m, n));
        for (auto& c : r.checks) EXPECT_TRUE(c.pass) << r.title << ": " << c.name << " " << c.detail;
    }
}

TEST(Superspace, FormAndBrackets) {
    for (auto [m, n] : kSpaces) {
        auto V = build_space(m, n);
        for (auto& r : {super::form_invariance_check(V), super::bracket_check(V)})
            for (auto& c : r.checks) EXPECT_TRUE(c.pass) << r.title << ": " << c.name << " " << c.detail;
    }
}
