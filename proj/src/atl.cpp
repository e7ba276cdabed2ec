#include "pbr/atl.hpp"

#include <algorithm>

namespace pbr {

ATLDiagram::ATLDiagram(int r, int s, std::vector<int> match, std::vector<char> decorated)
    : r_(r), s_(s), m_(std::move(match)), d_(std::move(decorated)) {
    int n = r + s;
    if ((int)m_.size() != n || (int)d_.size() != n) throw Error("ATL diagram size mismatch");
    for (int i = 0; i < n; ++i) {
        int j = m_[i];
        if (j < 0 || j >= n || j == i || m_[j] != i) throw Error("ATL matching is not a perfect matching");
        if (d_[i] != d_[j]) throw Error("ATL decoration must mark both ends of an arc");
    }
    for (int i = 0; i < n; ++i) {
        int a = std::min(i, m_[i]), b = std::max(i, m_[i]);
        for (int k = a + 1; k < b; ++k)
            if (m_[k] < a || m_[k] > b) throw Error("ATL matching crosses");
    }
    for (int i = 0; i < n; ++i)
        if (d_[i] && !outer(i)) throw Error("decorated arc is nested");
}

ATLDiagram ATLDiagram::identity(int n) {
    std::vector<int> m(2 * n);
    for (int j = 0; j < n; ++j) {
        m[j] = 2 * n - 1 - j;
        m[2 * n - 1 - j] = j;
    }
    return ATLDiagram(n, n, m, std::vector<char>(2 * n, 0));
}

ATLDiagram ATLDiagram::from_brauer(const BrauerDiagram& d) {
    if (!d.is_planar()) throw Error("Brauer diagram is not planar");
    int r = d.r(), s = d.s(), n = r + s;
    auto pos = [&](int p) { return p < r ? n - 1 - p : p - r; };
    std::vector<int> m(n);
    for (int p = 0; p < n; ++p) m[pos(p)] = pos(d.partner(p));
    return ATLDiagram(r, s, m, std::vector<char>(n, 0));
}

bool ATLDiagram::outer(int pos) const {
    int a = std::min(pos, m_[pos]);
    for (int k = 0; k < a; ++k)
        if (m_[k] > a) return false;
    return true;
}

int ATLDiagram::connectors() const {
    int c = 0;
    for (int i = 0; i < size(); ++i) c += d_[i] && i < m_[i];
    return c;
}

std::vector<int> ATLDiagram::pole_endpoints() const {
    std::vector<int> p;
    for (int i = 0; i < size(); ++i)
        if (d_[i]) p.push_back(i);
    return p;
}

bool ATLDiagram::operator<(const ATLDiagram& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (s_ != o.s_) return s_ < o.s_;
    if (m_ != o.m_) return m_ < o.m_;
    return d_ < o.d_;
}

std::string ATLDiagram::str() const {
    std::string s = std::to_string(r_) + "->" + std::to_string(s_) + " {";
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (m_[i] < i) continue;
        s += first ? "" : " ";
        first = false;
        s += "(" + std::to_string(i) + "," + std::to_string(m_[i]) + ")" + (d_[i] ? "*" : "");
    }
    return s + "}";
}

ATLElement::ATLElement(const ATLDiagram& d, const RatFunc& c) : r_(d.r()), s_(d.s()) { add(d, c); }

RatFunc ATLElement::coeff(const ATLDiagram& d) const {
    auto it = t_.find(d);
    return it == t_.end() ? RatFunc() : it->second;
}

void ATLElement::add(const ATLDiagram& d, const RatFunc& c) {
    if (d.r() != r_ || d.s() != s_) throw Error("ATL arity mismatch in sum");
    if (c.is_zero()) return;
    auto it = t_.find(d);
    if (it == t_.end()) {
        t_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ATLElement& ATLElement::operator+=(const ATLElement& o) {
    if (o.r_ != r_ || o.s_ != s_) throw Error("ATL arity mismatch in sum");
    for (auto& [d, c] : o.t_) add(d, c);
    return *this;
}

ATLElement& ATLElement::operator-=(const ATLElement& o) { return *this += -o; }

ATLElement ATLElement::operator-() const {
    ATLElement r = *this;
    for (auto& [d, c] : r.t_) c = -c;
    return r;
}

ATLElement operator*(const RatFunc& c, const ATLElement& a) {
    ATLElement r(a.r_, a.s_);
    for (auto& [d, x] : a.t_) r.add(d, c * x);
    return r;
}

ATLElement ATLElement::substitute(const std::map<int, Poly>& b) const {
    ATLElement r(r_, s_);
    for (auto& [d, c] : t_) r.add(d, c.substitute(b));
    return r;
}

std::string ATLElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [d, c] : t_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")" + d.str();
    }
    return s;
}

namespace atl {

RatFunc c_coeff() { return RatFunc((delta() - Poly(2)) * Q(1, 2)); }
RatFunc d_coeff() { return RatFunc(zvar(2)).div_delta(); }

std::pair<RatFunc, RatFunc> power_coeffs(int k) {
    static std::vector<std::pair<RatFunc, RatFunc>> memo{{RatFunc(0), RatFunc(1)}};
    while ((int)memo.size() <= k) {
        auto [a, b] = memo.back();
        memo.push_back({-(c_coeff() * a) + b, d_coeff() * a});
    }
    return memo[k];
}

RatFunc Z(int k) {
    static std::vector<RatFunc> memo{RatFunc(delta()), RatFunc(0)};
    while ((int)memo.size() <= k) {
        int n = memo.size();
        memo.push_back(-(c_coeff() * memo[n - 1]) + d_coeff() * memo[n - 2]);
    }
    return memo[k];
}

ATLElement compose(const ATLDiagram& up, const ATLDiagram& lo) {
    if (up.r() != lo.s()) throw Error("ATL arity mismatch in composition");
    int r = lo.r(), m = lo.s(), s = up.s();
    // Point ids: lower bottom j -> j, lower top k -> r+k, upper top j -> r+m+j.
    int N = r + m + s;
    auto lo_pos = [&](int id) { return id < r ? lo.bottom_pos(id) : lo.top_pos(id - r); };
    auto lo_id = [&](int pos) { return pos < m ? r + pos : r + m - 1 - pos; };
    auto up_pos = [&](int id) { return id < r + m ? up.bottom_pos(id - r) : up.top_pos(id - r - m); };
    auto up_id = [&](int pos) { return pos < s ? r + m + pos : r + (s + m - 1 - pos); };
    std::vector<char> seen(N, 0);
    // Walks from an endpoint; returns the far endpoint and the connector count.
    auto walk = [&](int id, bool in_lower) {
        int k = 0;
        while (true) {
            seen[id] = 1;
            int p = in_lower ? lo_pos(id) : up_pos(id);
            k += in_lower ? lo.decorated(p) : up.decorated(p);
            int q = in_lower ? lo_id(lo.partner(p)) : up_id(up.partner(p));
            seen[q] = 1;
            bool middle = q >= r && q < r + m;
            if (!middle) return std::make_pair(q, k);
            in_lower = !in_lower;
            id = q;
        }
    };
    int n = r + s;
    auto res_pos = [&](int id) { return id < r ? n - 1 - id : id - r - m; };
    struct Arc {
        int a, b, k;
    };
    std::vector<Arc> arcs;
    for (int id = 0; id < N; ++id) {
        if (seen[id] || (id >= r && id < r + m)) continue;
        auto [q, k] = walk(id, id < r);
        arcs.push_back({res_pos(id), res_pos(q), k});
    }
    RatFunc scalar(1);
    for (int id = r; id < r + m; ++id) {
        if (seen[id]) continue;
        // A closed loop; walk starting into the lower diagram.
        int k = 0, cur = id;
        bool in_lower = true;
        do {
            seen[cur] = 1;
            int p = in_lower ? lo_pos(cur) : up_pos(cur);
            k += in_lower ? lo.decorated(p) : up.decorated(p);
            cur = in_lower ? lo_id(lo.partner(p)) : up_id(up.partner(p));
            in_lower = !in_lower;
        } while (cur != id);
        scalar *= Z(k);
    }
    ATLElement out(r, s);
    if (scalar.is_zero()) return out;
    std::vector<int> match(n);
    for (auto& a : arcs) {
        match[a.a] = a.b;
        match[a.b] = a.a;
    }
    // Expand each decorated arc as a_k H + b_k.
    std::vector<int> dec_arcs;
    for (int i = 0; i < (int)arcs.size(); ++i)
        if (arcs[i].k > 0) dec_arcs.push_back(i);
    int D = dec_arcs.size();
    for (int mask = 0; mask < (1 << D); ++mask) {
        RatFunc c = scalar;
        std::vector<char> dec(n, 0);
        for (int j = 0; j < D; ++j) {
            auto& a = arcs[dec_arcs[j]];
            auto [ak, bk] = power_coeffs(a.k);
            if (mask >> j & 1) {
                c *= ak;
                dec[a.a] = dec[a.b] = 1;
            } else {
                c *= bk;
            }
            if (c.is_zero()) break;
        }
        if (!c.is_zero()) out.add(ATLDiagram(r, s, match, dec), c);
    }
    return out;
}

ATLElement compose(const ATLElement& upper, const ATLElement& lower) {
    if (upper.r() != lower.s()) throw Error("ATL arity mismatch in composition");
    ATLElement out(lower.r(), upper.s());
    for (auto& [du, cu] : upper.terms())
        for (auto& [dl, cl] : lower.terms()) out += (cu * cl) * compose(du, dl);
    return out;
}

namespace {

// s_i -> -1 + (2/delta) e_i.
ATLElement swap_image(int n, int i) {
    ATLElement e(ATLDiagram::identity(n), RatFunc(-1));
    e += ATLElement(ATLDiagram::from_brauer(BrauerDiagram::e(n, i)), RatFunc(2).div_delta());
    return e;
}

ATLElement permutation_image(const BrauerDiagram& p) {
    int n = p.r();
    ATLElement out(ATLDiagram::identity(n));
    BrauerDiagram cur = p;
    std::vector<int> word;
    while (true) {
        // winv[k]: bottom feeding top k.
        std::vector<int> winv(n);
        for (int k = 0; k < n; ++k) winv[k] = cur.partner(n + k);
        int i = -1;
        for (int k = 0; k + 1 < n; ++k)
            if (winv[k] > winv[k + 1]) {
                i = k;
                break;
            }
        if (i < 0) break;
        word.push_back(i + 1);
        cur = compose(BrauerDiagram::swap(n, i + 1), cur).d;
    }
    // p = s_{w0} s_{w1} ... ; the first peeled swap is applied last.
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = compose(swap_image(n, *it), out);
    return out;
}

}  // namespace

ATLElement from_brauer(const BrauerDiagram& d) {
    if (d.is_planar()) return ATLElement(ATLDiagram::from_brauer(d));
    int r = d.r(), s = d.s();
    std::vector<int> thr;
    std::vector<std::pair<int, int>> caps, cups;
    for (int b = 0; b < r; ++b) {
        int p = d.partner(b);
        if (p >= r) thr.push_back(b);
        else if (b < p) caps.push_back({b, p});
    }
    int t = thr.size();
    std::vector<int> w(r);
    for (int i = 0; i < t; ++i) w[thr[i]] = i;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        w[caps[j].first] = t + 2 * j;
        w[caps[j].second] = t + 2 * j + 1;
    }
    ATLElement out = permutation_image(BrauerDiagram::permutation(w));
    int cur = r;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        out = compose(ATLElement(ATLDiagram::from_brauer(BrauerDiagram::cap(cur, t + 1))), out);
        cur -= 2;
    }
    std::vector<int> tops;
    for (int b : thr) tops.push_back(d.partner(b) - r);
    std::vector<int> sorted = tops;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pi(t);
    for (int i = 0; i < t; ++i) pi[i] = std::lower_bound(sorted.begin(), sorted.end(), tops[i]) - sorted.begin();
    out = compose(permutation_image(BrauerDiagram::permutation(pi)), out);
    for (int x = 0; x < s; ++x) {
        int p = d.partner(r + x);
        if (p >= r && x < p - r) cups.push_back({x, p - r});
    }
    for (std::size_t j = 0; j < cups.size(); ++j) {
        out = compose(ATLElement(ATLDiagram::from_brauer(BrauerDiagram::cup(cur, t + 2 * j + 1))), out);
        cur += 2;
    }
    std::vector<int> wt(s);
    for (int i = 0; i < t; ++i) wt[i] = sorted[i];
    for (std::size_t j = 0; j < cups.size(); ++j) {
        wt[t + 2 * j] = cups[j].first;
        wt[t + 2 * j + 1] = cups[j].second;
    }
    return compose(permutation_image(BrauerDiagram::permutation(wt)), out);
}

RatFunc from_polar_coeff(const Poly& p) {
    RatFunc out;
    for (auto& [m, c] : p.terms()) {
        RatFunc t(c);
        for (auto& [v, e] : m.factors()) {
            RatFunc f = var::is_z(v) ? Z(var::z_index(v)) : RatFunc(Poly::var(v));
            for (int i = 0; i < e; ++i) t *= f;
        }
        out += t;
    }
    return out;
}

ATLElement from_polar(const PolarElement& w) {
    ATLElement out(w.r(), w.s());
    for (auto& [word, c] : w.terms()) {
        ATLElement x(ATLDiagram::identity(word.r()));
        for (auto& l : word.layers()) {
            if (auto d = std::get_if<BrauerDiagram>(&l)) {
                x = compose(from_brauer(*d), x);
                continue;
            }
            auto cl = std::get<ConnectorLayer>(l);
            int n = cl.n;
            ATLDiagram id = ATLDiagram::identity(n);
            std::vector<int> m = id.match();
            std::vector<char> dec(2 * n, 0);
            dec[0] = dec[2 * n - 1] = 1;
            ATLElement h(ATLDiagram(n, n, m, dec));
            if (cl.attach > 1) {
                int p = cl.attach - 1;
                std::vector<int> fw(n), bw(n);
                for (int k = 0; k < n; ++k) {
                    fw[k] = k < p ? k + 1 : (k == p ? 0 : k);
                    bw[fw[k]] = k;
                }
                h = compose(permutation_image(BrauerDiagram::permutation(bw)),
                            compose(h, permutation_image(BrauerDiagram::permutation(fw))));
            }
            x = compose(h, x);
        }
        out += from_polar_coeff(c) * x;
    }
    return out;
}

PolarElement lift(const ATLDiagram& d) {
    int r = d.r(), s = d.s(), n = r + s;
    // Hom(0, n) picture: decorated arcs become decorated cups, left to right.
    std::vector<std::pair<int, int>> dec_arcs, plain;
    for (int i = 0; i < n; ++i) {
        if (d.partner(i) < i) continue;
        (d.decorated(i) ? dec_arcs : plain).push_back({i, d.partner(i)});
    }
    int t = dec_arcs.size();
    std::vector<Layer> layers;
    int cur = 0;
    for (int j = 0; j < t; ++j) {
        layers.push_back(BrauerDiagram::cup(cur, 1));
        cur += 2;
        layers.push_back(ConnectorLayer{cur, 1});
    }
    // Planar layer 2t -> n.
    std::vector<int> pa(2 * t + n);
    for (int j = 0; j < t; ++j) {
        pa[2 * j] = 2 * t + dec_arcs[j].first;
        pa[2 * t + dec_arcs[j].first] = 2 * j;
        pa[2 * j + 1] = 2 * t + dec_arcs[j].second;
        pa[2 * t + dec_arcs[j].second] = 2 * j + 1;
    }
    for (auto& [a, b] : plain) {
        pa[2 * t + a] = 2 * t + b;
        pa[2 * t + b] = 2 * t + a;
    }
    BrauerDiagram place(2 * t, n, pa);
    if (place != BrauerDiagram::identity(n)) layers.push_back(place);
    PolarElement flat(PolarWord(0, layers));
    if (r == 0) return flat;
    // Bend the last r points back down: (I_s (x) nested caps) o (flat (x) I_r).
    std::vector<int> cp(s + 2 * r + s);
    int src = s + 2 * r;
    for (int j = 0; j < s; ++j) {
        cp[j] = src + j;
        cp[src + j] = j;
    }
    for (int j = 0; j < r; ++j) {
        int a = s + r - 1 - j, b = s + r + j;
        cp[a] = b;
        cp[b] = a;
    }
    BrauerDiagram caps(src, s, cp);
    return polar::iota(caps) * tensor_right(flat, brauer::id(r));
}

namespace {

using Arcs = std::vector<std::pair<int, int>>;

std::vector<Arcs> matchings(int lo, int hi) {
    if (lo >= hi) return {Arcs{}};
    std::vector<Arcs> out;
    for (int j = lo + 1; j < hi; j += 2)
        for (auto& in : matchings(lo + 1, j))
            for (auto& rest : matchings(j + 1, hi)) {
                Arcs a{{lo, j}};
                a.insert(a.end(), in.begin(), in.end());
                a.insert(a.end(), rest.begin(), rest.end());
                out.push_back(a);
            }
    return out;
}

}  // namespace

std::vector<ATLDiagram> standard_basis(int r, int s) {
    std::vector<ATLDiagram> out;
    int n = r + s;
    if (n % 2) return out;
    for (auto& arcs : matchings(0, n)) {
        std::vector<int> m(n);
        for (auto& [x, y] : arcs) {
            m[x] = y;
            m[y] = x;
        }
        std::vector<int> outer_arcs;
        int reach = -1;
        for (int i = 0; i < n; ++i)
            if (m[i] > i && i > reach) {
                outer_arcs.push_back(i);
                reach = m[i];
            }
        int k = outer_arcs.size();
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<char> dec(n, 0);
            for (int j = 0; j < k; ++j)
                if (mask >> j & 1) dec[outer_arcs[j]] = dec[m[outer_arcs[j]]] = 1;
            out.emplace_back(r, s, m, dec);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ATLDiagram& a, const ATLDiagram& b) { return a.connectors() < b.connectors(); });
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

long long stratum_count(int N, int t) { return binomial(2 * N, N - t) - binomial(2 * N, N - t - 1); }

Poly tlb_z2(const Poly& lambda) {
    return -(delta() * lambda * ((delta() - Poly(2)) * Q(1, 2) - lambda));
}

ATLElement tlb_specialize(const ATLElement& e, const Poly& lambda) {
    return e.substitute({{var::z(2), tlb_z2(lambda)}});
}

Report rank_report(int max_n) {
    Report rep{"ATL ranks", {}};
    for (int N = 0; N <= max_n; ++N)
        for (int r = 0; r <= 2 * N; ++r) {
            auto basis = standard_basis(r, 2 * N - r);
            long long want = binomial(2 * N, N);
            std::vector<long long> strata(N + 1, 0);
            for (auto& d : basis) ++strata[d.connectors()];
            bool ok = (long long)basis.size() == want;
            for (int t = 0; t <= N; ++t) ok &= strata[t] == stratum_count(N, t);
            rep.add("N=" + std::to_string(N) + " r=" + std::to_string(r), ok,
                    std::to_string(basis.size()) + " / C(" + std::to_string(2 * N) + "," + std::to_string(N) +
                        ")=" + std::to_string(want));
        }
    return rep;
}

}  // namespace atl

}  // namespace pbr
