// The witness diagram on a truncated sp2 Verma module.
#include <cstdio>

#include "pbr/functors.hpp"

using namespace pbr;

int main() {
    for (int t = 1; t <= 3; ++t) {
        Report r = tlb_witness(t, Q(7, 3), t + 2);
        std::printf("%s: %s\n", r.title.c_str(), r.pass() ? "pass" : "FAIL");
        for (auto& c : r.checks) std::printf("  %-40s %s\n", c.name.c_str(), c.detail.c_str());
    }
    CharIdentity ci = char_identity_numeric(modules::sp2_simple(3));
    std::printf("roots of E on L(3) (x) V:");
    for (auto& [q, m] : ci.roots) std::printf(" %s (x%d)", to_string(q).c_str(), m);
    std::printf("\n");
}
