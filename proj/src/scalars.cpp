#include "pbr/scalars.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pbr {

std::string var::name(int v) {
    if (v == delta) return "delta";
    if (v == lambda) return "lambda";
    if (v == h) return "h";
    if (is_z(v)) return "z" + std::to_string(z_index(v));
    return "v" + std::to_string(v);
}

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw Error("not a rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw Error("zero denominator: " + s);
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

Monomial Monomial::of(int v, int e) {
    Monomial m;
    if (e > 0) m.f_.push_back({v, e});
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, e] : f_) d += e;
    return d;
}

int Monomial::exponent(int v) const {
    for (auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
            r.f_.push_back(o.f_[j++]);
        } else {
            r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::without(int v) const {
    Monomial r;
    for (auto& p : f_)
        if (p.first != v) r.f_.push_back(p);
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da > db;
    return f_ < o.f_;
}

std::string Monomial::str() const {
    std::string s;
    for (auto& [v, e] : f_) {
        if (!s.empty()) s += "*";
        s += var::name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Poly::Poly(long c) {
    if (c != 0) t_[Monomial()] = Q(c);
}

Poly::Poly(const Q& c) {
    if (c != 0) t_[Monomial()] = c;
}

Poly Poly::var(int v, int e) { return term(Monomial::of(v, e), Q(1)); }

Poly Poly::term(const Monomial& m, const Q& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Q& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Q Poly::constant_term() const {
    auto it = t_.find(Monomial());
    return it == t_.end() ? Q(0) : it->second;
}

int Poly::degree_in(int v) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.exponent(v));
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Q& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

bool Poly::operator<(const Poly& o) const {
    if (t_.size() != o.t_.size()) return t_.size() < o.t_.size();
    auto i = t_.begin();
    auto j = o.t_.begin();
    for (; i != t_.end(); ++i, ++j) {
        if (i->first < j->first) return true;
        if (j->first < i->first) return false;
        if (i->second != j->second) return i->second < j->second;
    }
    return false;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("negative power of a polynomial");
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly Poly::substitute(const std::map<int, Poly>& b) const {
    if (b.empty()) return *this;
    Poly r;
    std::map<std::pair<int, int>, Poly> powers;
    for (auto& [m, c] : t_) {
        Poly term = Poly::term(Monomial(), c);
        Monomial rest;
        for (auto& [v, e] : m.factors()) {
            auto it = b.find(v);
            if (it == b.end()) {
                rest = rest * Monomial::of(v, e);
                continue;
            }
            auto key = std::make_pair(v, e);
            auto pit = powers.find(key);
            if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
            term *= pit->second;
        }
        r += term * Poly::term(rest, Q(1));
    }
    return r;
}

Poly Poly::coeff(int v, int e) const {
    Poly r;
    for (auto& [m, c] : t_)
        if (m.exponent(v) == e) r.add_term(m.without(v), c);
    return r;
}

bool Poly::divide_linear(int v, const Q& c, Poly& quotient) const {
    int n = degree_in(v);
    quotient = Poly();
    if (is_zero()) return true;
    if (n == 0) return false;
    std::vector<Poly> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = coeff(v, i);
    // Synthetic division of sum a_i v^i by (v - c).
    std::vector<Poly> q(n);
    q[n - 1] = a[n];
    for (int i = n - 1; i >= 1; --i) q[i - 1] = a[i] + q[i] * c;
    Poly rem = a[0] + q[0] * c;
    if (!rem.is_zero()) return false;
    for (int i = 0; i < n; ++i) quotient += q[i] * Poly::var(v, i);
    return true;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : t_) {
        Q a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (m.empty()) {
            s += to_string(a);
        } else {
            if (a != 1) s += to_string(a) + "*";
            s += m.str();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

RatFunc::RatFunc(const Poly& p, int a, int b) : num_(p), a_(a), b_(b) {
    if (a < 0 || b < 0) throw Error("negative denominator exponent");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        a_ = b_ = 0;
        return;
    }
    Poly q;
    while (a_ > 0 && num_.divide_linear(var::delta, Q(0), q)) {
        num_ = q;
        --a_;
    }
    while (b_ > 0 && num_.divide_linear(var::delta, Q(2), q)) {
        num_ = q;
        --b_;
    }
}

Poly RatFunc::as_poly() const {
    if (!is_poly()) throw Error("not a polynomial: " + str());
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    int a = std::max(a_, o.a_), b = std::max(b_, o.b_);
    Poly d = delta(), d2 = delta() - Poly(2);
    Poly x = num_ * d.pow(a - a_) * d2.pow(b - b_);
    Poly y = o.num_ * d.pow(a - o.a_) * d2.pow(b - o.b_);
    num_ = x + y;
    a_ = a;
    b_ = b;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    a_ += o.a_;
    b_ += o.b_;
    reduce();
    return *this;
}

bool RatFunc::operator==(const RatFunc& o) const {
    return a_ == o.a_ && b_ == o.b_ && num_ == o.num_;
}

RatFunc RatFunc::div_delta(int e) const { return RatFunc(num_, a_ + e, b_); }

RatFunc RatFunc::div_delta_minus_two(int e) const { return RatFunc(num_, a_, b_ + e); }

RatFunc RatFunc::substitute(const std::map<int, Poly>& b) const {
    auto it = b.find(var::delta);
    if (it == b.end()) return RatFunc(num_.substitute(b), a_, b_);
    if (!it->second.is_constant()) {
        if (a_ || b_) throw Error("delta bound to a non-constant in a fraction");
        return RatFunc(num_.substitute(b));
    }
    Q d = it->second.constant_term();
    if ((a_ && d == 0) || (b_ && d == 2)) throw Error("delta specialised to a pole");
    Q den = 1;
    for (int i = 0; i < a_; ++i) den *= d;
    for (int i = 0; i < b_; ++i) den *= d - 2;
    Q inv = 1 / den;
    return RatFunc(num_.substitute(b) * inv);
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    std::string den;
    if (a_) den += a_ == 1 ? "delta" : "delta^" + std::to_string(a_);
    if (b_) {
        if (!den.empty()) den += "*";
        den += b_ == 1 ? "(delta - 2)" : "(delta - 2)^" + std::to_string(b_);
    }
    return "(" + num_.str() + ")/(" + den + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

}  // namespace pbr
