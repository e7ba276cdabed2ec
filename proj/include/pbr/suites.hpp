#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbr/report.hpp"
#include "pbr/scalars.hpp"

namespace pbr {

struct SuiteConfig {
    // (m, n) with V = C^{m|2n}; replaces the default space list when set.
    std::optional<std::pair<int, int>> space;
    std::optional<Q> lambda;
    std::optional<int> depth;
    unsigned seed = 20240601;
};

struct SuiteResult {
    std::string name;
    std::vector<Report> reports;
    double seconds = 0;

    bool pass() const;
    std::size_t checks() const;
    std::size_t failures() const;
};

namespace suites {

const std::vector<std::string>& names();
bool known(const std::string& name);
// Throws Error on an unknown name.
SuiteResult run(const std::string& name, const SuiteConfig& cfg = {});

// Spaces (m, n) of the Key Lemma list: (m, 2n) in {(2,0),(3,0),(4,0),(0,2),(0,4),(1,2),(2,2),(3,2)}.
std::vector<std::pair<int, int>> standard_spaces();

Report tlb_quadratic();
Report atl_closure(int max_total);
Report atl_associativity(int triples, unsigned seed);
Report atl_sp2_tables(const std::vector<int>& lambdas, int max_total);
Report quadratic_transpose_images();

}  // namespace suites

}  // namespace pbr
