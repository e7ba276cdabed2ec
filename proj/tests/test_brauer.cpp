#include <gtest/gtest.h>

#include "pbr/brauer.hpp"
#include "pbr/chord.hpp"

using namespace pbr;

TEST(Brauer, CapAfterCupIsDelta) {
    auto c = compose(BrauerDiagram::cap(2, 1), BrauerDiagram::cup(0, 1));
    EXPECT_EQ(c.loops, 1);
    EXPECT_EQ(c.d.size(), 0);
}

TEST(Brauer, SkewR2) {
    for (auto& c : brauer::verify_h_skew(2)) EXPECT_TRUE(c.pass) << c.name << c.detail;
}
TEST(Brauer, SkewR4) {
    for (auto& c : brauer::verify_h_skew(4)) EXPECT_TRUE(c.pass) << c.name << c.detail;
}
TEST(Brauer, Chord) {
    for (int r = 2; r <= 4; ++r)
        for (auto& c : brauer::verify_chord_in_brauer(r)) EXPECT_TRUE(c.pass) << c.name;
}
