#include "pbr/uea.hpp"

#include <algorithm>

namespace pbr {

namespace {

inline int sgn(int p) { return (p & 1) ? -1 : 1; }

}  // namespace

UEAElement::UEAElement(const Q& c) {
    if (c != 0) t_[{}] = c;
}

UEAElement::UEAElement(const PBWMonomial& m, const Q& c) {
    if (c != 0) t_[m] = c;
}

Q UEAElement::coeff(const PBWMonomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Q(0) : it->second;
}

int UEAElement::degree() const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, (int)m.size());
    return d;
}

void UEAElement::add(const PBWMonomial& m, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (auto& [m, c] : o.t_) add(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    for (auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

UEAElement UEAElement::operator-() const {
    UEAElement r;
    for (auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

UEAElement operator*(const Q& c, const UEAElement& a) {
    UEAElement r;
    if (c == 0) return r;
    for (auto& [m, x] : a.terms()) r.add(m, c * x);
    return r;
}

UEA::UEA(int m, int n) : V_(build_space(m, n)), L_(super::lie_basis(V_)) {
    int g = L_.size();
    c_.assign(g, std::vector<std::vector<std::pair<int, Q>>>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            DVec x = L_.coords(super::supercommutator(L_.mats[i], L_.par[i], L_.mats[j], L_.par[j]));
            for (int k = 0; k < g; ++k)
                if (x[k] != 0) c_[i][j].push_back({k, x[k]});
        }
}

int UEA::parity(const PBWMonomial& w) const {
    int p = 0;
    for (int g : w) p += L_.par[g];
    return p & 1;
}

UEAElement UEA::from_matrix(const DMat& x) const {
    DVec c = L_.coords(x);
    UEAElement u;
    for (int i = 0; i < gens(); ++i) u.add({i}, c[i]);
    return u;
}

UEAElement UEA::mul_gen_right(const PBWMonomial& w, int g) {
    auto key = std::make_pair(w, g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    UEAElement out;
    if (w.empty() || g > w.back() || (g == w.back() && !L_.par[g])) {
        PBWMonomial v = w;
        v.push_back(g);
        out.add(v, Q(1));
    } else {
        PBWMonomial prefix(w.begin(), w.end() - 1);
        int h = w.back();
        if (g == h) {
            // odd X: X X = 1/2 [X, X]
            for (auto& [k, c] : c_[g][g]) out += (c / 2) * mul_gen_right(prefix, k);
        } else {
            // h g = (-1)^{|h||g|} g h + [h, g]
            UEAElement pg = mul_gen_right(prefix, g);
            out += Q(sgn(L_.par[h] * L_.par[g])) * mul_gen_right(pg, h);
            for (auto& [k, c] : c_[h][g]) out += c * mul_gen_right(prefix, k);
        }
    }
    memo_.emplace(key, out);
    return out;
}

UEAElement UEA::mul_gen_right(const UEAElement& u, int g) {
    UEAElement out;
    for (auto& [m, c] : u.terms()) out += c * mul_gen_right(m, g);
    return out;
}

UEAElement UEA::straighten(const std::vector<int>& word) {
    UEAElement u(Q(1));
    for (int g : word) u = mul_gen_right(u, g);
    return u;
}

UEAElement UEA::mul(const UEAElement& a, const UEAElement& b) {
    UEAElement out;
    for (auto& [m, c] : b.terms()) {
        UEAElement cur = a;
        for (int g : m) cur = mul_gen_right(cur, g);
        out += c * cur;
    }
    return out;
}

UEAElement UEA::bracket(const UEAElement& a, const UEAElement& b) {
    UEAElement part[2][2];
    for (auto& [m, c] : a.terms()) part[0][parity(m)].add(m, c);
    for (auto& [m, c] : b.terms()) part[1][parity(m)].add(m, c);
    UEAElement out;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            if (part[0][p].is_zero() || part[1][q].is_zero()) continue;
            out += mul(part[0][p], part[1][q]);
            out -= Q(sgn(p * q)) * mul(part[1][q], part[0][p]);
        }
    return out;
}

UEAElement UEA::x_upper(int a, int b) const { return from_matrix(super::X(V_, a, b)); }

UEAElement UEA::casimir() {
    UEAElement c;
    for (int a = 0; a < V_.dim; ++a)
        for (int b = 0; b < V_.dim; ++b) c += Q(sgn(V_.par[b]), 2) * mul(x_upper(a, b), x_upper(b, a));
    return c;
}

UMatrix UEA::e_matrix() const {
    UMatrix e(V_.dim, std::vector<UEAElement>(V_.dim));
    for (int b = 0; b < V_.dim; ++b)
        for (int a = 0; a < V_.dim; ++a) e[b][a] = Q(sgn(V_.par[b])) * x_upper(a, b);
    return e;
}

UMatrix UEA::mat_mul(const UMatrix& x, const UMatrix& y) {
    int d = V_.dim;
    UMatrix out(d, std::vector<UEAElement>(d));
    for (int b = 0; b < d; ++b)
        for (int a = 0; a < d; ++a)
            for (int c = 0; c < d; ++c) {
                if (x[b][a].is_zero() || y[a][c].is_zero()) continue;
                int s = sgn((V_.par[b] + V_.par[a]) * (V_.par[a] + V_.par[c]));
                out[b][c] += Q(s) * mul(x[b][a], y[a][c]);
            }
    return out;
}

UMatrix UEA::t_power(int k, bool koszul) {
    auto& cache = t_cache_[koszul];
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    int d = V_.dim;
    UMatrix t(d, std::vector<UEAElement>(d));
    if (k == 1) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) t[a][b] = x_upper(a, b);
    } else {
        UMatrix prev = t_power(k - 1, koszul);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    int e = V_.par[c];
                    if (koszul) e += (V_.par[b] + V_.par[c]) * (V_.par[a] + V_.par[c]);
                    t[a][b] += Q(sgn(e)) * mul(x_upper(c, b), prev[a][c]);
                }
    }
    cache[k] = t;
    return t;
}

UEAElement UEA::fz(int l, bool koszul) {
    UMatrix t = t_power(l, koszul);
    UEAElement z;
    for (int c = 0; c < V_.dim; ++c) z += t[c][c];
    return z;
}

DMat UEA::represent(const UEAElement& u, const std::vector<DMat>& act) const {
    int d = act.empty() ? 0 : (int)act[0].size();
    DMat out = dense::zeros(d, d);
    for (auto& [m, c] : u.terms()) {
        DMat p = dense::identity(d);
        for (int g : m) p = dense::mul(p, act[g]);
        out = dense::add(out, p, c);
    }
    return out;
}

Report UEA::centrality_check(const UEAElement& u, const std::string& label) {
    Report rep{"centrality of " + label + " in U(osp(" + std::to_string(V_.m) + "|" + std::to_string(2 * V_.n) + "))", {}};
    int bad = 0;
    for (int g = 0; g < gens(); ++g) {
        UEAElement b = bracket(u, gen(g));
        if (!b.is_zero()) {
            ++bad;
            rep.add("[u, J" + std::to_string(L_.index[g].first) + std::to_string(L_.index[g].second) + "]", false,
                    str(b));
        }
    }
    rep.add("brackets with all generators vanish", bad == 0,
            std::to_string(gens()) + " generators, degree " + std::to_string(u.degree()));
    return rep;
}

std::string UEA::str(const UEAElement& u) const {
    if (u.is_zero()) return "0";
    std::string s;
    for (auto& [m, c] : u.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c);
        for (int g : m) s += "*J" + std::to_string(L_.index[g].first) + std::to_string(L_.index[g].second);
    }
    return s;
}

namespace uea {

Report centrality_suite(int m, int n, int max_l) {
    UEA U(m, n);
    Report rep{"central elements F_U(Z_l), l <= " + std::to_string(max_l), {}};
    for (int l = 1; l <= max_l; ++l) {
        UEAElement z = U.fz(l);
        if (l == 1) {
            rep.add("F_U(Z_1) = 0", z.is_zero(), U.str(z));
            continue;
        }
        Report r = U.centrality_check(z, "F_U(Z_" + std::to_string(l) + ")");
        for (auto& c : r.checks) c.name = "l=" + std::to_string(l) + ": " + c.name;
        rep.append(r.checks);
    }
    UEAElement c = U.casimir();
    rep.add("F_U(Z_2) = 2C", U.fz(2) == Q(2) * c);
    return rep;
}

UMatrix sp2_char_residual(UEA& U, const Q& c) {
    UMatrix e = U.e_matrix();
    UMatrix r = U.mat_mul(e, e);
    UEAElement cas = U.casimir();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r[i][j] -= c * e[i][j];
        r[i][i] += cas;
    }
    return r;
}

Report sp2_characteristic_identity() {
    UEA U(0, 1);
    Report rep{"sp2 characteristic identity E^2 - 2E + C = 0", {}};
    rep.add("F_U(Z_2) = 2C", U.fz(2) == Q(2) * U.casimir(), U.str(U.casimir()));
    UMatrix r = sp2_char_residual(U, Q(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rep.add("entry (" + std::to_string(i) + "," + std::to_string(j) + ")", r[i][j].is_zero(), U.str(r[i][j]));
    UMatrix s = sp2_char_residual(U, Q(1));
    bool nonzero = false;
    for (auto& row : s)
        for (auto& x : row) nonzero |= !x.is_zero();
    rep.add("coefficient -1 instead of -2 leaves a nonzero residue", nonzero);
    return rep;
}

}  // namespace uea

}  // namespace pbr
