#include "pbr/chord.hpp"

#include "pbr/brauer.hpp"

namespace pbr::chord {

std::string Relation::str() const {
    auto t = [](int a, int b) { return "t" + std::to_string(a) + std::to_string(b); };
    switch (kind) {
        case Kind::disjoint:
            return "[" + t(i, j) + ", " + t(k, l) + "]";
        case Kind::left_four_term:
            return "[" + t(i, j) + ", " + t(i, k) + " + " + t(j, k) + "]";
        case Kind::right_four_term:
            return "[" + t(i, j) + " + " + t(i, k) + ", " + t(j, k) + "]";
    }
    return {};
}

std::vector<Relation> relation_instances(int r) {
    std::vector<Relation> out;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (int k = 1; k <= r; ++k)
                for (int l = k + 1; l <= r; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    if (std::make_pair(i, j) < std::make_pair(k, l)) out.push_back({Kind::disjoint, i, j, k, l});
                }
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (int k = 1; k <= r; ++k)
                if (k != i && k != j) out.push_back({Kind::left_four_term, i, j, k, 0});
    for (int j = 1; j <= r; ++j)
        for (int k = j + 1; k <= r; ++k)
            for (int i = 1; i <= r; ++i)
                if (i != j && i != k) out.push_back({Kind::right_four_term, i, j, k, 0});
    return out;
}

long expected_instance_count(int r) {
    auto binom = [](long n, long k) {
        if (k < 0 || k > n) return 0L;
        long b = 1;
        for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    };
    return 3 * binom(r, 4) + 6 * binom(r, 3);
}

}  // namespace pbr::chord

namespace pbr::brauer {

std::vector<Check> verify_chord_in_brauer(int r) {
    std::vector<std::vector<BrauerElement>> h(r + 1, std::vector<BrauerElement>(r + 1));
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) h[i][j] = H(r, i, j);
    return chord::check_assignment<BrauerElement>(r, [&](int i, int j) { return h[i][j]; });
}

}  // namespace pbr::brauer
