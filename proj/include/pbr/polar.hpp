#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pbr/brauer.hpp"
#include "pbr/report.hpp"
#include "pbr/scalars.hpp"

namespace pbr {

// H_{0,attach}(n): a connector from the pole to strand attach (1-based).
struct ConnectorLayer {
    int n = 1;
    int attach = 1;
    bool operator==(const ConnectorLayer& o) const { return n == o.n && attach == o.attach; }
    bool operator<(const ConnectorLayer& o) const {
        return n != o.n ? n < o.n : attach < o.attach;
    }
};

using Layer = std::variant<BrauerDiagram, ConnectorLayer>;
int layer_source(const Layer& l);
int layer_target(const Layer& l);

// Layers are listed bottom to top.
class PolarWord {
public:
    PolarWord() = default;
    explicit PolarWord(int r) : r_(r), s_(r) {}
    PolarWord(int r, std::vector<Layer> layers);

    int r() const { return r_; }
    int s() const { return s_; }
    const std::vector<Layer>& layers() const { return layers_; }
    int order() const;

    bool operator==(const PolarWord& o) const {
        return r_ == o.r_ && s_ == o.s_ && layers_ == o.layers_;
    }
    bool operator<(const PolarWord& o) const;
    std::string str() const;

private:
    int r_ = 0;
    int s_ = 0;
    std::vector<Layer> layers_;
};

// upper o lower.
PolarWord concat(const PolarWord& upper, const PolarWord& lower);
PolarWord tensor_right(const PolarWord& w, const BrauerDiagram& b);

class PolarElement {
public:
    PolarElement() = default;
    PolarElement(int r, int s) : r_(r), s_(s) {}
    PolarElement(const PolarWord& w, const Poly& c = Poly(1));

    int r() const { return r_; }
    int s() const { return s_; }
    const std::map<PolarWord, Poly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int max_order() const;

    void add(const PolarWord& w, const Poly& c);
    PolarElement& operator+=(const PolarElement& o);
    PolarElement& operator-=(const PolarElement& o);
    PolarElement operator-() const;
    friend PolarElement operator+(PolarElement a, const PolarElement& b) { return a += b; }
    friend PolarElement operator-(PolarElement a, const PolarElement& b) { return a -= b; }
    friend PolarElement operator*(const Poly& c, const PolarElement& a);
    // Layer concatenation, a o b; no normalization.
    friend PolarElement operator*(const PolarElement& a, const PolarElement& b);
    bool operator==(const PolarElement& o) const {
        return r_ == o.r_ && s_ == o.s_ && t_ == o.t_;
    }
    bool operator!=(const PolarElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    int r_ = 0;
    int s_ = 0;
    std::map<PolarWord, Poly> t_;
};

PolarElement tensor_right(const PolarElement& a, const BrauerElement& b);
// Concatenation followed by normalize.
PolarElement compose(const PolarElement& upper, const PolarElement& lower);
PolarElement normalize(const PolarElement& e);
PolarElement commutator(const PolarElement& a, const PolarElement& b);

namespace polar {

PolarElement iota(const BrauerElement& a);
PolarElement iota(const BrauerDiagram& d);
PolarElement I(int r);
// H = H_{01}(1).
PolarElement H();
// H_{ij}(r) for 0 <= i < j <= r; i = 0 is the connector to strand j.
PolarElement H(int r, int i, int j);
PolarElement Theta(int r, int j);
// Pi: 2 -> 0, Coprod: 0 -> 2.
PolarElement Pi();
PolarElement Coprod();
// Pi (H^l (x) I) Coprod, unreduced.
PolarElement Z(int l);
// Pi H^{k1} X0 H^{k2} X0 ... Coprod, unreduced.
PolarElement Zword(const std::vector<int>& k);
// (H^l)^T = (I0 (x) cap (x) I)(H^l (x) X)(I0 (x) cup (x) I).
PolarElement transpose_power(int l);
PolarElement power(const PolarElement& a, int l);

// Image in B(delta): strand 1 is the pole.
BrauerElement varpi(const PolarElement& e);
// varpi(Z_k) as a polynomial in delta.
Poly varpi_z(int k);

// Value of a closed loop whose connectors, read top to bottom, lie on the
// ascending (A) or descending (B) side; result in z's and delta.
Poly z_loop_value(const std::string& word);
Poly z_word_reduce(const std::vector<int>& k);

// Odd z's rewritten through even ones (z1 = 0).
Poly odd_z_polynomial(int l);
Poly eliminate_odd_z(const Poly& p);
// T_l with T_0 = 1, T_{l+1} = T_l((1-delta)-h) + (z_l - h^l), z_0 = delta.
Poly ht_transpose_poly(int l);
// h^i -> z_i, h^0 -> delta.
Poly close_h(const Poly& p);

struct Relator {
    std::string family;
    std::string name;
    PolarElement value;
};
// Relators of Hom(r,r) expected to vanish, for 1 <= r <= 4.
std::vector<Relator> relation_suites(int r, int max_power = 4);

Report varpi_relations(int r);

}  // namespace polar

}  // namespace pbr
