#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbr/report.hpp"
#include "pbr/scalars.hpp"

namespace pbr {

// Perfect matching on bottom points 0..r-1 followed by top points r..r+s-1,
// each group numbered left to right.
class BrauerDiagram {
public:
    BrauerDiagram() = default;
    BrauerDiagram(int r, int s, std::vector<int> pairing);

    static BrauerDiagram identity(int n);
    // s_i on n strands, 1-based i.
    static BrauerDiagram swap(int n, int i);
    static BrauerDiagram e(int n, int i);
    // n strands -> n-2 strands, joining strands i and i+1.
    static BrauerDiagram cap(int n, int i);
    // n strands -> n+2 strands, new arc at top points i and i+1.
    static BrauerDiagram cup(int n, int i);
    // Bottom point j goes to top point w[j] (0-based).
    static BrauerDiagram permutation(const std::vector<int>& w);

    int r() const { return r_; }
    int s() const { return s_; }
    int size() const { return r_ + s_; }
    int partner(int p) const { return p_[p]; }
    const std::vector<int>& pairing() const { return p_; }
    int bottom(int j) const { return j; }
    int top(int j) const { return r_ + j; }
    bool is_top(int p) const { return p >= r_; }

    int through_count() const;
    bool is_permutation() const { return r_ == s_ && through_count() == r_; }
    // Planarity in the cyclic order: bottom left to right, then top right to left.
    bool is_planar() const;

    bool operator==(const BrauerDiagram& o) const {
        return r_ == o.r_ && s_ == o.s_ && p_ == o.p_;
    }
    bool operator!=(const BrauerDiagram& o) const { return !(*this == o); }
    bool operator<(const BrauerDiagram& o) const;

    std::string str() const;

private:
    int r_ = 0;
    int s_ = 0;
    std::vector<int> p_;
};

struct Composite {
    BrauerDiagram d;
    int loops = 0;
};

// upper o lower: lower is drawn below upper.
Composite compose(const BrauerDiagram& upper, const BrauerDiagram& lower);
BrauerDiagram tensor(const BrauerDiagram& a, const BrauerDiagram& b);
BrauerDiagram reflect(const BrauerDiagram& d);

class BrauerElement {
public:
    BrauerElement() = default;
    BrauerElement(int r, int s) : r_(r), s_(s) {}
    BrauerElement(const BrauerDiagram& d, const Poly& c = Poly(1));

    int r() const { return r_; }
    int s() const { return s_; }
    const std::map<BrauerDiagram, Poly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Poly coeff(const BrauerDiagram& d) const;

    void add(const BrauerDiagram& d, const Poly& c);
    BrauerElement& operator+=(const BrauerElement& o);
    BrauerElement& operator-=(const BrauerElement& o);
    BrauerElement operator-() const;
    friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
    friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
    friend BrauerElement operator*(const Poly& c, const BrauerElement& a);
    // Composition: a * b = a o b.
    friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b);
    bool operator==(const BrauerElement& o) const {
        return r_ == o.r_ && s_ == o.s_ && t_ == o.t_;
    }
    bool operator!=(const BrauerElement& o) const { return !(*this == o); }

    BrauerElement substitute(const std::map<int, Poly>& b) const;
    std::string str() const;

private:
    int r_ = 0;
    int s_ = 0;
    std::map<BrauerDiagram, Poly> t_;
};

BrauerElement tensor(const BrauerElement& a, const BrauerElement& b);
BrauerElement commutator(const BrauerElement& a, const BrauerElement& b);

namespace brauer {

BrauerElement id(int n);
BrauerElement s(int n, int i);
BrauerElement e(int n, int i);
BrauerElement cap(int n, int i);
BrauerElement cup(int n, int i);
BrauerElement perm(const std::vector<int>& w);
BrauerElement H(int n, int i);
// Cycle s_{j-1} ... s_{i+1}, empty when j <= i+1.
BrauerElement X(int n, int i, int j);
BrauerElement H(int n, int i, int j);
// The element H itself, in B_2.
BrauerElement H();

std::vector<Check> verify_h_skew(int r, const BrauerElement& h = H());
std::vector<Check> verify_h_generating(int r);
// Chord relations for t_ij -> H_ij(r), symbolic delta.
std::vector<Check> verify_chord_in_brauer(int r);

}  // namespace brauer

}  // namespace pbr
