#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pbr/report.hpp"

namespace pbr::chord {

enum class Kind { disjoint, left_four_term, right_four_term };

// disjoint:        [t_ij, t_kl] = 0
// left_four_term:  [t_ij, t_ik + t_jk] = 0   (i < j, k distinct)
// right_four_term: [t_ij + t_ik, t_jk] = 0   (j < k, i distinct)
// Generators are symmetric: t_ji = t_ij. Indices are 1-based.
struct Relation {
    Kind kind;
    int i, j, k, l;
    std::string str() const;
};

std::vector<Relation> relation_instances(int r);
// 3*C(r,4) + 6*C(r,3).
long expected_instance_count(int r);

template <class T>
using Assignment = std::function<T(int, int)>;

template <class T>
std::vector<Check> check_assignment(int r, const Assignment<T>& t) {
    auto at = [&](int a, int b) { return a < b ? t(a, b) : t(b, a); };
    std::vector<Check> out;
    for (const auto& rel : relation_instances(r)) {
        T lhs, rhs;
        switch (rel.kind) {
            case Kind::disjoint:
                lhs = at(rel.i, rel.j);
                rhs = at(rel.k, rel.l);
                break;
            case Kind::left_four_term:
                lhs = at(rel.i, rel.j);
                rhs = at(rel.i, rel.k) + at(rel.j, rel.k);
                break;
            case Kind::right_four_term:
                lhs = at(rel.i, rel.j) + at(rel.i, rel.k);
                rhs = at(rel.j, rel.k);
                break;
        }
        T c = lhs * rhs - rhs * lhs;
        Check ch{rel.str(), c.is_zero(), {}};
        if (!ch.pass) ch.detail = "nonzero commutator";
        out.push_back(std::move(ch));
    }
    return out;
}

}  // namespace pbr::chord
