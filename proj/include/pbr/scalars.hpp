#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbr {

using Q = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Indeterminate ids. z_k is encoded as kZBase + k.
namespace var {
constexpr int delta = 0;
constexpr int lambda = 1;
constexpr int h = 2;
constexpr int kZBase = 100;
constexpr int z(int k) { return kZBase + k; }
inline bool is_z(int v) { return v >= kZBase; }
inline int z_index(int v) { return v - kZBase; }
std::string name(int v);
}  // namespace var

Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

class Monomial {
public:
    Monomial() = default;
    static Monomial of(int v, int e = 1);

    int degree() const;
    int exponent(int v) const;
    bool empty() const { return f_.empty(); }
    const std::vector<std::pair<int, int>>& factors() const { return f_; }

    Monomial operator*(const Monomial& o) const;
    // Drops the factor v entirely.
    Monomial without(int v) const;
    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator<(const Monomial& o) const;
    std::string str() const;

private:
    std::vector<std::pair<int, int>> f_;
};

class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const Q& c);
    static Poly var(int v, int e = 1);
    static Poly term(const Monomial& m, const Q& c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    const std::map<Monomial, Q>& terms() const { return t_; }
    int degree_in(int v) const;
    bool uses(int v) const { return degree_in(v) > 0; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Q& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Q& c) { return a *= c; }
    friend Poly operator*(const Q& c, Poly a) { return a *= c; }
    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;

    Poly pow(int e) const;
    Poly substitute(const std::map<int, Poly>& b) const;
    // Coefficient of v^e, as a polynomial in the remaining indeterminates.
    Poly coeff(int v, int e) const;
    // Exact division by (v - c); returns false when not divisible.
    bool divide_linear(int v, const Q& c, Poly& quotient) const;
    std::string str() const;

private:
    void add_term(const Monomial& m, const Q& c);
    std::map<Monomial, Q> t_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Fraction num / (delta^a (delta-2)^b); no other denominators occur.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long c) : num_(c) {}
    RatFunc(const Q& c) : num_(c) {}
    RatFunc(const Poly& p) : num_(p) {}
    RatFunc(const Poly& p, int delta_pow, int delta_minus_two_pow);

    const Poly& num() const { return num_; }
    int delta_pow() const { return a_; }
    int delta_minus_two_pow() const { return b_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return a_ == 0 && b_ == 0; }
    Poly as_poly() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc div_delta(int e = 1) const;
    RatFunc div_delta_minus_two(int e = 1) const;
    // Substitutes non-delta indeterminates in the numerator, and delta
    // everywhere if bound to a rational other than 0 and 2.
    RatFunc substitute(const std::map<int, Poly>& b) const;
    std::string str() const;

private:
    void reduce();
    Poly num_;
    int a_ = 0;
    int b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

inline Poly delta() { return Poly::var(var::delta); }
inline Poly lambda() { return Poly::var(var::lambda); }
inline Poly zvar(int k) { return Poly::var(var::z(k)); }

}  // namespace pbr
