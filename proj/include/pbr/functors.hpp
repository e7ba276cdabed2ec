#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pbr/brauer.hpp"
#include "pbr/linalg.hpp"
#include "pbr/polar.hpp"
#include "pbr/report.hpp"
#include "pbr/superspace.hpp"

namespace pbr {

// A finite-dimensional (or truncated) module over osp(m|2n).
struct Module {
    std::string name;
    int m = 0;
    int n = 0;
    int dim = 0;
    std::vector<int> par;
    // Action of each element of lie_basis(V), in order.
    std::vector<DMat> act;
    bool truncated = false;
    int depth = 0;
    Q lambda;

    DMat action(const super::LieBasis& L, const DMat& x) const;
};

namespace modules {
Module natural(int m, int n);
Module trivial(int m, int n);
Module adjoint(int m, int n);
// sp2 = osp(0|2) modules with basis m_0..m_D: T m_k = (l-2k) m_k, Y m_k = m_{k+1}, X m_k = k(l-k+1) m_{k-1}.
Module sp2_simple(int lambda);
Module sp2_truncated_verma(const Q& lambda, int depth);
// natural(3,0), natural(0,1), natural(1,1), sp2_simple(2), adjoint(0,1).
std::vector<Module> default_suite();
}  // namespace modules

// Failures of the module axioms [act x, act y] = act [x, y].
Report module_check(const Module& M);

// Matrix of an operator on M (x) V^r, exact on M-depth window [0, margin] (margin < 0: everywhere).
struct RepOperator {
    SMat mat;
    int margin = -1;
    int head_dim = 1;
    int tail_dim = 1;
};

// F: B(sdim) -> tensor powers of V.
SMat evaluate_brauer(const BrauerElement& a, const SuperSpace& V);
SMat evaluate_brauer(const BrauerDiagram& d, const SuperSpace& V);

// Cached evaluation of F_M.
class FunctorContext {
public:
    explicit FunctorContext(Module M);

    const Module& module() const { return M_; }
    const SuperSpace& space() const { return V_; }
    const super::LieBasis& lie() const { return L_; }
    Q delta_value() const { return Q(V_.sdim); }

    // Scalar by which F_M(Z_k) acts; throws if it is not scalar.
    Q z_value(int k);
    // delta and z's replaced by their values; throws if other indeterminates remain.
    Q scalar(const Poly& p);

    SMat brauer_layer(const BrauerDiagram& d);
    SMat connector(int n, int attach);
    RepOperator evaluate(const PolarWord& w);
    RepOperator evaluate(const PolarElement& e);

    // g acting diagonally on M (x) V^r.
    SMat diagonal_action(int r, int generator);

private:
    Module M_;
    SuperSpace V_;
    super::LieBasis L_;
    std::map<BrauerDiagram, SMat> brauer_cache_;
    std::map<std::pair<int, int>, SMat> conn_cache_;
    std::map<int, Q> z_cache_;
};

RepOperator evaluate_polar(const PolarElement& w, const Module& M);

// Zero test restricted to the validity window.
bool is_zero_in_window(const RepOperator& op);

struct Verdict {
    bool equal = false;
    bool varpi_equal = false;
    std::string text;
};
Verdict oracle_equal(const PolarElement& a, const PolarElement& b, const std::vector<Module>& suite);

// H_ij(r) under F agrees with the slot-wise Casimir t_ij on V^r.
Report quartet_check(int r, int m, int n);

struct CharIdentity {
    std::vector<std::pair<Q, int>> roots;
    int degree = 0;
    bool product_vanishes = false;
};
// Roots of the characteristic polynomial of E(M) = F_M(H) on M (x) V.
CharIdentity char_identity_numeric(const Module& M);
Report char_identity_report(const Module& M, const std::vector<Q>& expected_roots);

// Layers bottom to top: h on strand 1 then a cap on strands 1,2, repeated t times.
PolarElement witness_diagram(int t);
Report tlb_witness(int t, const Q& lambda, int depth);
Report atl_factorization_check(const std::vector<int>& lambdas);

}  // namespace pbr
