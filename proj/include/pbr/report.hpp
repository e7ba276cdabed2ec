#pragma once

#include <string>
#include <vector>

namespace pbr {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void append(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (auto& c : checks) n += !c.pass;
        return n;
    }
};

}  // namespace pbr
