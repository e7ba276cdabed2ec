#pragma once

#include <utility>
#include <vector>

#include "pbr/linalg.hpp"
#include "pbr/report.hpp"

namespace pbr {

// V = C^{m|2n}: indices 0..m-1 even, m..m+2n-1 odd.
struct SuperSpace {
    int m = 0;
    int n = 0;
    int dim = 0;
    int sdim = 0;
    std::vector<int> par;
    DMat gInv;  // omega(e^a, e^b)
    DMat g;

    // e_a = sum_b g_{ab} e^b, so that omega(e_a, e^b) = delta_ab.
    DVec lower_vector(int a) const;
};

SuperSpace build_space(int m, int n);

namespace super {

// E^c_b: e^b -> e^c.
DMat unit(const SuperSpace& V, int c, int b);
// E_ab: e^b -> e_a.
DMat unit_lower(const SuperSpace& V, int a, int b);
DMat J(const SuperSpace& V, int a, int b);
// X^a_b = sum_c g^{ac} J_cb.
DMat X(const SuperSpace& V, int a, int b);
inline int parity(const SuperSpace& V, int a, int b) { return (V.par[a] + V.par[b]) & 1; }

// Basis of osp(m|2n): J_ab for a < b, and J_aa for odd a.
struct LieBasis {
    std::vector<std::pair<int, int>> index;
    std::vector<DMat> mats;
    std::vector<int> par;
    // Coordinates of a V-matrix in this basis; throws if outside the span.
    DVec coords(const DMat& x) const;
    int size() const { return (int)mats.size(); }
};
LieBasis lie_basis(const SuperSpace& V);
// m(m-1)/2 + n(2n+1) + 2mn.
int expected_lie_dim(int m, int n);

// [A, B] = AB - (-1)^{pq} BA.
DMat supercommutator(const DMat& a, int pa, const DMat& b, int pb);

}  // namespace super

// Lexicographic product basis of a list of graded factors, first factor most significant.
class TensorSpace {
public:
    TensorSpace() = default;
    explicit TensorSpace(std::vector<std::vector<int>> factors);
    static TensorSpace power(const SuperSpace& V, int k, const std::vector<int>& head = {});

    int factors() const { return (int)f_.size(); }
    int dim() const { return dim_; }
    int factor_dim(int j) const { return (int)f_[j].size(); }
    const std::vector<int>& factor_par(int j) const { return f_[j]; }
    std::vector<int> digits(int idx) const;
    int index(const std::vector<int>& d) const;
    int prefix_parity(const std::vector<int>& d, int j) const;

    TensorSpace without(int j, int count) const;
    TensorSpace inserted(int j, const std::vector<std::vector<int>>& extra) const;

    // A (parity pa) acting on factor j with the Koszul sign of the earlier factors.
    SMat slot(int j, const DMat& a, int pa) const;
    // Factors offset..offset+k-1 permuted: factor offset+i moves to offset+w[i].
    SMat permute(int offset, const std::vector<int>& w) const;

private:
    std::vector<std::vector<int>> f_;
    int dim_ = 1;
};

namespace super {

// Contraction of factors j, j+1 (both V) with omega.
SMat cap(const TensorSpace& T, const SuperSpace& V, int j);
// Insertion of sum_a e_a (x) e^a at position j.
SMat cup(const TensorSpace& T, const SuperSpace& V, int j);

struct StructureMaps {
    SMat tau;
    SMat chat;   // V(x)V -> K
    SMat ccheck; // K -> V(x)V
    SMat e;
};
StructureMaps structure_maps(const SuperSpace& V);

// 1/2 sum_{a,b} (-1)^[b] X^a_b (x) X^b_a on factors i < j of T (both V).
SMat t_action(const TensorSpace& T, const SuperSpace& V, int i, int j);
DMat casimir(const SuperSpace& V);

Report key_lemma_check(const SuperSpace& V);
Report casimir_eigen_check(const SuperSpace& V);
Report form_invariance_check(const SuperSpace& V, bool perturb = false);
Report bracket_check(const SuperSpace& V);

}  // namespace super

}  // namespace pbr
