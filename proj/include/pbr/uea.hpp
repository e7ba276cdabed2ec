#pragma once

#include <map>
#include <string>
#include <vector>

#include "pbr/linalg.hpp"
#include "pbr/report.hpp"
#include "pbr/superspace.hpp"

namespace pbr {

// Sorted generator indices; odd generators appear at most once.
using PBWMonomial = std::vector<int>;

class UEAElement {
public:
    UEAElement() = default;
    explicit UEAElement(const Q& c);
    UEAElement(const PBWMonomial& m, const Q& c);

    const std::map<PBWMonomial, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Q coeff(const PBWMonomial& m) const;
    int degree() const;

    void add(const PBWMonomial& m, const Q& c);
    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement operator-() const;
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(const Q& c, const UEAElement& a);
    bool operator==(const UEAElement& o) const { return t_ == o.t_; }
    bool operator!=(const UEAElement& o) const { return !(*this == o); }

private:
    std::map<PBWMonomial, Q> t_;
};

using UMatrix = std::vector<std::vector<UEAElement>>;

// U(osp(m|2n)) in the PBW basis of lie_basis(V), generators ordered as listed there.
class UEA {
public:
    UEA(int m, int n);

    const SuperSpace& space() const { return V_; }
    const super::LieBasis& lie() const { return L_; }
    int gens() const { return L_.size(); }
    int parity(const PBWMonomial& w) const;

    UEAElement gen(int i) const { return UEAElement({i}, Q(1)); }
    // Element of the Lie superalgebra (a V-matrix) as a degree one element.
    UEAElement from_matrix(const DMat& x) const;

    UEAElement straighten(const std::vector<int>& word);
    UEAElement mul(const UEAElement& a, const UEAElement& b);
    // [a, b] = ab - (-1)^{|a||b|} ba on homogeneous components.
    UEAElement bracket(const UEAElement& a, const UEAElement& b);

    // X^a_b.
    UEAElement x_upper(int a, int b) const;
    UEAElement casimir();
    // Entry (b, a) is (-1)^[b] X^a_b, the coefficient of E^b_a.
    UMatrix e_matrix() const;
    // Product in U (x) End(V) with the Koszul sign of the entries.
    UMatrix mat_mul(const UMatrix& a, const UMatrix& b);
    // T[k][a][b] = T[k]^a_b, from T[k]^a_b = sum_c (-1)^[c] s X^c_b T[k-1]^a_c with
    // s = (-1)^{([b]+[c])([a]+[c])} (koszul) or s = 1.
    UMatrix t_power(int k, bool koszul = true);
    // sum_c T[l]^c_c.
    UEAElement fz(int l, bool koszul = true);

    // Image of u under generator i -> act[i].
    DMat represent(const UEAElement& u, const std::vector<DMat>& act) const;

    Report centrality_check(const UEAElement& u, const std::string& label);
    std::string str(const UEAElement& u) const;

private:
    UEAElement mul_gen_right(const PBWMonomial& w, int g);
    UEAElement mul_gen_right(const UEAElement& u, int g);

    SuperSpace V_;
    super::LieBasis L_;
    // [J_i, J_j] = sum_k c[i][j][k] J_k.
    std::vector<std::vector<std::vector<std::pair<int, Q>>>> c_;
    std::map<std::pair<PBWMonomial, int>, UEAElement> memo_;
    std::map<bool, std::map<int, UMatrix>> t_cache_;
};

namespace uea {

Report centrality_suite(int m, int n, int max_l);
// E^2 - c E + C Id for sp2 = osp(0|2); zero exactly when c = 2.
UMatrix sp2_char_residual(UEA& U, const Q& c);
Report sp2_characteristic_identity();

}  // namespace uea

}  // namespace pbr
