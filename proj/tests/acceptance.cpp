#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pbr/functors.hpp"
#include "pbr/suites.hpp"

using namespace pbr;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget;  // seconds, 0 = none
    std::function<std::vector<Report>()> run;
};

std::vector<Report> suite(const std::string& name) { return suites::run(name).reports; }

std::vector<Report> join(std::vector<Report> a, const std::vector<Report>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

int main() {
    std::vector<Criterion> all = {
        {1, "Key Lemma (mu (x) mu)(t) = tau - e", 5, [] { return suite("key-lemma"); }},
        {2, "Casimir eigenvalue sdim - 1", 0, [] { return suite("casimir-eigen"); }},
        {3, "chord relations in Brauer algebras, r <= 5", 0, [] { return suite("chord-brauer"); }},
        {4, "AB and JM relators vanish under varpi and oracle modules, r <= 4", 60,
         [] { return join(suite("ab-relations"), suite("jm")); }},
        {5, "Z-structure and odd z reduction", 0, [] { return suite("z-reduction"); }},
        {6, "ATL ranks and strata, N <= 6", 30, [] { return suite("atl-rank"); }},
        {7, "ATL closure, associativity, delta = -2 tables", 0,
         [] {
             return std::vector<Report>{suites::atl_closure(6), suites::atl_associativity(500, SuiteConfig{}.seed),
                                        suites::atl_sp2_tables({1, 2, 3}, 8)};
         }},
        {8, "TLB quadratic relation", 0,
         [] { return std::vector<Report>{suites::tlb_quadratic(), atl_factorization_check({1, 2, 3})}; }},
        {9, "quartet commuting square, r <= 4", 0, [] { return suite("quartet"); }},
        {10, "centrality of F_U(Z_l), l <= 4", 180, [] { return suite("centrality"); }},
        {11, "sp2 characteristic identity", 5, [] { return suite("sp2-char"); }},
        {12, "numeric characteristic identities", 0, [] { return suite("char-numeric"); }},
        {13, "TLB witness (-2)^t m_t and competitors", 0, [] { return suite("tlb-witness"); }},
        {14, "(H^2)^T image on oracle modules", 0,
         [] { return std::vector<Report>{suites::quadratic_transpose_images()}; }},
    };
    int failed = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Report> reps;
        std::string error;
        try {
            reps = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::size_t checks = 0, bad = 0;
        for (auto& r : reps) {
            checks += r.checks.size();
            bad += r.failures();
        }
        bool over = c.budget > 0 && secs > c.budget;
        bool ok = error.empty() && bad == 0 && checks > 0 && !over;
        failed += !ok;
        std::printf("%s criterion %2d: %s [%zu checks, %.2f s%s]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), checks,
                    secs, over ? ", over budget" : "");
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (auto& r : reps)
            for (auto& ch : r.checks)
                if (!ch.pass) std::printf("    %s: %s %s\n", r.title.c_str(), ch.name.c_str(), ch.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
