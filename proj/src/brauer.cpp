#include "pbr/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pbr {

BrauerDiagram::BrauerDiagram(int r, int s, std::vector<int> pairing)
    : r_(r), s_(s), p_(std::move(pairing)) {
    if (r < 0 || s < 0) throw Error("negative arity");
    if ((int)p_.size() != r + s) throw Error("pairing size mismatch");
    for (int i = 0; i < r + s; ++i) {
        int j = p_[i];
        if (j < 0 || j >= r + s || j == i || p_[j] != i) throw Error("pairing is not a perfect matching");
    }
}

BrauerDiagram BrauerDiagram::identity(int n) {
    std::vector<int> p(2 * n);
    for (int i = 0; i < n; ++i) {
        p[i] = n + i;
        p[n + i] = i;
    }
    return BrauerDiagram(n, n, p);
}

BrauerDiagram BrauerDiagram::swap(int n, int i) {
    if (i < 1 || i >= n) throw Error("s_i index out of range");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::swap(w[i - 1], w[i]);
    return permutation(w);
}

BrauerDiagram BrauerDiagram::e(int n, int i) {
    if (i < 1 || i >= n) throw Error("e_i index out of range");
    std::vector<int> p(2 * n);
    for (int k = 0; k < n; ++k) {
        p[k] = n + k;
        p[n + k] = k;
    }
    int a = i - 1, b = i;
    p[a] = b;
    p[b] = a;
    p[n + a] = n + b;
    p[n + b] = n + a;
    return BrauerDiagram(n, n, p);
}

BrauerDiagram BrauerDiagram::cap(int n, int i) {
    if (i < 1 || i >= n) throw Error("cap index out of range");
    int s = n - 2;
    std::vector<int> p(n + s);
    int t = 0;
    for (int k = 0; k < n; ++k) {
        if (k == i - 1) {
            p[k] = k + 1;
            p[k + 1] = k;
            ++k;
            continue;
        }
        p[k] = n + t;
        p[n + t] = k;
        ++t;
    }
    return BrauerDiagram(n, s, p);
}

BrauerDiagram BrauerDiagram::cup(int n, int i) {
    int s = n + 2;
    if (i < 1 || i >= s) throw Error("cup index out of range");
    std::vector<int> p(n + s);
    int b = 0;
    for (int k = 0; k < s; ++k) {
        if (k == i - 1) {
            p[n + k] = n + k + 1;
            p[n + k + 1] = n + k;
            ++k;
            continue;
        }
        p[n + k] = b;
        p[b] = n + k;
        ++b;
    }
    return BrauerDiagram(n, s, p);
}

BrauerDiagram BrauerDiagram::permutation(const std::vector<int>& w) {
    int n = (int)w.size();
    std::vector<int> p(2 * n);
    for (int j = 0; j < n; ++j) {
        p[j] = n + w[j];
        p[n + w[j]] = j;
    }
    return BrauerDiagram(n, n, p);
}

int BrauerDiagram::through_count() const {
    int c = 0;
    for (int i = 0; i < r_; ++i)
        if (p_[i] >= r_) ++c;
    return c;
}

bool BrauerDiagram::is_planar() const {
    auto pos = [&](int p) { return p < r_ ? p : r_ + (s_ - 1 - (p - r_)); };
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < size(); ++i)
        if (i < p_[i]) {
            int a = pos(i), b = pos(p_[i]);
            if (a > b) std::swap(a, b);
            arcs.push_back({a, b});
        }
    for (auto& [a, b] : arcs)
        for (auto& [c, d] : arcs)
            if (a < c && c < b && b < d) return false;
    return true;
}

bool BrauerDiagram::operator<(const BrauerDiagram& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (s_ != o.s_) return s_ < o.s_;
    return p_ < o.p_;
}

std::string BrauerDiagram::str() const {
    std::ostringstream os;
    os << "[" << r_ << "->" << s_ << ":";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << p_[i];
    os << "]";
    return os.str();
}

Composite compose(const BrauerDiagram& upper, const BrauerDiagram& lower) {
    int r = lower.r(), m = lower.s(), s = upper.s();
    if (upper.r() != m) throw Error("Brauer arity mismatch in composition");
    const auto& L = lower.pairing();
    const auto& U = upper.pairing();
    std::vector<char> seen(m, 0);
    std::vector<int> p(r + s, -1);
    // Follows a path entering the middle row at point k from below or above.
    auto walk = [&](int k, bool from_below) {
        while (true) {
            seen[k] = 1;
            if (from_below) {
                int u = U[k];
                if (u >= m) return r + (u - m);
                k = u;
                from_below = false;
            } else {
                int l = L[r + k];
                if (l < r) return l;
                k = l - r;
                from_below = true;
            }
        }
    };
    for (int i = 0; i < r; ++i) {
        if (p[i] >= 0) continue;
        int l = L[i];
        int end = l < r ? l : walk(l - r, true);
        p[i] = end;
        p[end] = i;
    }
    for (int j = 0; j < s; ++j) {
        int pt = r + j;
        if (p[pt] >= 0) continue;
        int u = U[m + j];
        int end = u >= m ? r + (u - m) : walk(u, false);
        p[pt] = end;
        p[end] = pt;
    }
    int loops = 0;
    for (int k = 0; k < m; ++k) {
        if (seen[k]) continue;
        ++loops;
        int cur = k;
        do {
            seen[cur] = 1;
            cur = U[cur];
            seen[cur] = 1;
            cur = L[r + cur] - r;
        } while (cur != k);
    }
    return {BrauerDiagram(r, s, p), loops};
}

BrauerDiagram tensor(const BrauerDiagram& a, const BrauerDiagram& b) {
    int r = a.r() + b.r(), s = a.s() + b.s();
    auto ma = [&](int x) { return x < a.r() ? x : r + (x - a.r()); };
    auto mb = [&](int x) { return x < b.r() ? a.r() + x : r + a.s() + (x - b.r()); };
    std::vector<int> p(r + s);
    for (int x = 0; x < a.size(); ++x) p[ma(x)] = ma(a.partner(x));
    for (int x = 0; x < b.size(); ++x) p[mb(x)] = mb(b.partner(x));
    return BrauerDiagram(r, s, p);
}

BrauerDiagram reflect(const BrauerDiagram& d) {
    int r = d.s(), s = d.r();
    auto m = [&](int x) { return x < d.r() ? r + x : x - d.r(); };
    std::vector<int> p(r + s);
    for (int x = 0; x < d.size(); ++x) p[m(x)] = m(d.partner(x));
    return BrauerDiagram(r, s, p);
}

BrauerElement::BrauerElement(const BrauerDiagram& d, const Poly& c) : r_(d.r()), s_(d.s()) {
    add(d, c);
}

Poly BrauerElement::coeff(const BrauerDiagram& d) const {
    auto it = t_.find(d);
    return it == t_.end() ? Poly() : it->second;
}

void BrauerElement::add(const BrauerDiagram& d, const Poly& c) {
    if (d.r() != r_ || d.s() != s_) throw Error("Brauer arity mismatch in sum");
    if (c.is_zero()) return;
    auto it = t_.find(d);
    if (it == t_.end()) {
        t_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& o) {
    if (o.r_ != r_ || o.s_ != s_) throw Error("Brauer arity mismatch in sum");
    for (auto& [d, c] : o.t_) add(d, c);
    return *this;
}

BrauerElement& BrauerElement::operator-=(const BrauerElement& o) { return *this += -o; }

BrauerElement BrauerElement::operator-() const {
    BrauerElement r = *this;
    for (auto& [d, c] : r.t_) c = -c;
    return r;
}

BrauerElement operator*(const Poly& c, const BrauerElement& a) {
    BrauerElement r(a.r_, a.s_);
    if (c.is_zero()) return r;
    for (auto& [d, x] : a.t_) r.add(d, c * x);
    return r;
}

BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
    if (a.r_ != b.s_) throw Error("Brauer arity mismatch in composition");
    BrauerElement r(b.r_, a.s_);
    Poly d = delta();
    for (auto& [da, ca] : a.t_)
        for (auto& [db, cb] : b.t_) {
            Composite c = compose(da, db);
            r.add(c.d, ca * cb * d.pow(c.loops));
        }
    return r;
}

BrauerElement BrauerElement::substitute(const std::map<int, Poly>& b) const {
    BrauerElement r(r_, s_);
    for (auto& [d, c] : t_) r.add(d, c.substitute(b));
    return r;
}

std::string BrauerElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [d, c] : t_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")" + d.str();
    }
    return s;
}

BrauerElement tensor(const BrauerElement& a, const BrauerElement& b) {
    BrauerElement r(a.r() + b.r(), a.s() + b.s());
    for (auto& [da, ca] : a.terms())
        for (auto& [db, cb] : b.terms()) r.add(tensor(da, db), ca * cb);
    return r;
}

BrauerElement commutator(const BrauerElement& a, const BrauerElement& b) { return a * b - b * a; }

namespace brauer {

BrauerElement id(int n) { return BrauerElement(BrauerDiagram::identity(n)); }
BrauerElement s(int n, int i) { return BrauerElement(BrauerDiagram::swap(n, i)); }
BrauerElement e(int n, int i) { return BrauerElement(BrauerDiagram::e(n, i)); }
BrauerElement cap(int n, int i) { return BrauerElement(BrauerDiagram::cap(n, i)); }
BrauerElement cup(int n, int i) { return BrauerElement(BrauerDiagram::cup(n, i)); }
BrauerElement perm(const std::vector<int>& w) { return BrauerElement(BrauerDiagram::permutation(w)); }

BrauerElement H(int n, int i) { return s(n, i) - e(n, i); }

BrauerElement X(int n, int i, int j) {
    if (i < 1 || j > n || i >= j) throw Error("X_ij index out of range");
    BrauerElement x = id(n);
    for (int k = j - 1; k >= i + 1; --k) x = x * s(n, k);
    return x;
}

BrauerElement H(int n, int i, int j) {
    if (i < 1 || j > n || i >= j) throw Error("H_ij index out of range");
    BrauerElement w = id(n), winv = id(n);
    for (int k = j - 1; k >= i + 1; --k) {
        w = w * s(n, k);
        winv = s(n, k) * winv;
    }
    return w * H(n, i) * winv;
}

BrauerElement H() { return H(2, 1); }

namespace {

Check make_check(const std::string& name, const BrauerElement& lhs, const BrauerElement& rhs) {
    Check c;
    c.name = name;
    c.pass = lhs == rhs;
    if (!c.pass) c.detail = "lhs - rhs = " + (lhs - rhs).str();
    return c;
}

BrauerElement embed(const BrauerElement& h, int n, int i) {
    BrauerElement x = tensor(id(i - 1), h);
    return tensor(x, id(n - i - 1));
}

}  // namespace

std::vector<Check> verify_h_skew(int r, const BrauerElement& h) {
    if (r < 2) throw Error("verify_h_skew needs r >= 2");
    if (h.r() != 2 || h.s() != 2) throw Error("verify_h_skew needs a (2,2) element");
    std::vector<Check> out;
    BrauerElement pad = id(r - 2);
    auto lower = tensor(tensor(id(1), cup(0, 1)), id(1));
    auto upper = tensor(tensor(id(1), cap(2, 1)), id(1));
    auto left = upper * tensor(BrauerElement(BrauerDiagram::swap(2, 1)), h) * lower;
    out.push_back(make_check("skew symmetry (X (x) H)", tensor(left, pad), tensor(-h, pad)));
    auto right = upper * tensor(h, BrauerElement(BrauerDiagram::swap(2, 1))) * lower;
    out.push_back(make_check("skew symmetry (H (x) X)", tensor(right, pad), tensor(-h, pad)));
    for (int i = 2; i + 1 <= r; ++i) {
        std::string k = std::to_string(i);
        auto Hm = embed(h, r, i - 1);
        out.push_back(make_check("s_" + k + " H_" + std::to_string(i - 1) + " e_" + k,
                                 s(r, i) * Hm * e(r, i), -(Hm * e(r, i))));
        out.push_back(make_check("e_" + k + " H_" + std::to_string(i - 1) + " s_" + k,
                                 e(r, i) * Hm * s(r, i), -(e(r, i) * Hm)));
        out.push_back(make_check("e_" + k + " H_" + std::to_string(i - 1) + " e_" + k,
                                 e(r, i) * Hm * e(r, i), BrauerElement(r, r)));
        auto Hp = embed(h, r, i);
        std::string km = std::to_string(i - 1);
        out.push_back(make_check("s_" + km + " H_" + k + " e_" + km,
                                 s(r, i - 1) * Hp * e(r, i - 1), -(Hp * e(r, i - 1))));
        out.push_back(make_check("e_" + km + " H_" + k + " s_" + km,
                                 e(r, i - 1) * Hp * s(r, i - 1), -(e(r, i - 1) * Hp)));
        out.push_back(make_check("e_" + km + " H_" + k + " e_" + km,
                                 e(r, i - 1) * Hp * e(r, i - 1), BrauerElement(r, r)));
    }
    return out;
}

std::vector<Check> verify_h_generating(int r) {
    std::vector<Check> out;
    Poly dm2 = delta() - Poly(2);
    for (int i = 1; i < r; ++i) {
        auto Hi = H(r, i);
        auto sq = Hi * Hi;
        std::string k = std::to_string(i);
        out.push_back(make_check("(delta-2) e_" + k + " = H_" + k + "^2 - 1", dm2 * e(r, i), sq - id(r)));
        out.push_back(make_check("(delta-2) s_" + k + " = H_" + k + "^2 + (delta-2) H_" + k + " - 1",
                                 dm2 * s(r, i), sq + dm2 * Hi - id(r)));
    }
    return out;
}

}  // namespace brauer

}  // namespace pbr
