#pragma once

#include <map>
#include <string>
#include <vector>

#include "pbr/brauer.hpp"
#include "pbr/polar.hpp"
#include "pbr/report.hpp"
#include "pbr/scalars.hpp"

namespace pbr {

// Standard affine Temperley-Lieb diagram. Boundary points on a line: top j at
// position j, bottom j at position r+s-1-j. Arcs are non-crossing; an arc not
// nested inside another may carry one connector to the pole.
class ATLDiagram {
public:
    ATLDiagram() = default;
    ATLDiagram(int r, int s, std::vector<int> match, std::vector<char> decorated);

    static ATLDiagram identity(int n);
    static ATLDiagram from_brauer(const BrauerDiagram& d);

    int r() const { return r_; }
    int s() const { return s_; }
    int size() const { return r_ + s_; }
    int top_pos(int j) const { return j; }
    int bottom_pos(int j) const { return r_ + s_ - 1 - j; }
    int partner(int pos) const { return m_[pos]; }
    bool decorated(int pos) const { return d_[pos]; }
    bool outer(int pos) const;
    int connectors() const;

    const std::vector<int>& match() const { return m_; }
    // Pole endpoints in boundary order.
    std::vector<int> pole_endpoints() const;

    bool operator==(const ATLDiagram& o) const { return r_ == o.r_ && s_ == o.s_ && m_ == o.m_ && d_ == o.d_; }
    bool operator<(const ATLDiagram& o) const;
    std::string str() const;

private:
    int r_ = 0;
    int s_ = 0;
    std::vector<int> m_;
    std::vector<char> d_;
};

class ATLElement {
public:
    ATLElement() = default;
    ATLElement(int r, int s) : r_(r), s_(s) {}
    ATLElement(const ATLDiagram& d, const RatFunc& c = RatFunc(1));

    int r() const { return r_; }
    int s() const { return s_; }
    const std::map<ATLDiagram, RatFunc>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    RatFunc coeff(const ATLDiagram& d) const;

    void add(const ATLDiagram& d, const RatFunc& c);
    ATLElement& operator+=(const ATLElement& o);
    ATLElement& operator-=(const ATLElement& o);
    ATLElement operator-() const;
    friend ATLElement operator+(ATLElement a, const ATLElement& b) { return a += b; }
    friend ATLElement operator-(ATLElement a, const ATLElement& b) { return a -= b; }
    friend ATLElement operator*(const RatFunc& c, const ATLElement& a);
    bool operator==(const ATLElement& o) const { return r_ == o.r_ && s_ == o.s_ && t_ == o.t_; }
    bool operator!=(const ATLElement& o) const { return !(*this == o); }
    ATLElement substitute(const std::map<int, Poly>& b) const;
    std::string str() const;

private:
    int r_ = 0;
    int s_ = 0;
    std::map<ATLDiagram, RatFunc> t_;
};

namespace atl {

// c = (delta-2)/2 and d = z2/delta, so that H^2 = -c H + d on a strand.
RatFunc c_coeff();
RatFunc d_coeff();
// H^k = a_k H + b_k.
std::pair<RatFunc, RatFunc> power_coeffs(int k);
// Loop carrying k connectors: Z_0 = delta, Z_1 = 0, Z_{k+2} = -c Z_{k+1} + d Z_k.
RatFunc Z(int k);

ATLElement compose(const ATLElement& upper, const ATLElement& lower);
ATLElement compose(const ATLDiagram& upper, const ATLDiagram& lower);

ATLElement from_brauer(const BrauerDiagram& d);
ATLElement from_polar(const PolarElement& w);
// z_k -> Z_k(delta, z2) in a polar coefficient.
RatFunc from_polar_coeff(const Poly& p);

// Planar polar word representing the diagram.
PolarElement lift(const ATLDiagram& d);

std::vector<ATLDiagram> standard_basis(int r, int s);
// C(2N, N-t) - C(2N, N-t-1).
long long stratum_count(int N, int t);
long long binomial(int n, int k);

// z2 -> -delta*lambda*((delta-2)/2 - lambda).
ATLElement tlb_specialize(const ATLElement& e, const Poly& lambda);
Poly tlb_z2(const Poly& lambda);

// Rank table for N <= max_n.
Report rank_report(int max_n);

}  // namespace atl

}  // namespace pbr
