#include "pbr/polar.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "pbr/chord.hpp"

namespace pbr {

int layer_source(const Layer& l) {
    if (auto d = std::get_if<BrauerDiagram>(&l)) return d->r();
    return std::get<ConnectorLayer>(l).n;
}

int layer_target(const Layer& l) {
    if (auto d = std::get_if<BrauerDiagram>(&l)) return d->s();
    return std::get<ConnectorLayer>(l).n;
}

PolarWord::PolarWord(int r, std::vector<Layer> layers) : r_(r), s_(r), layers_(std::move(layers)) {
    for (auto& l : layers_) {
        if (auto c = std::get_if<ConnectorLayer>(&l))
            if (c->attach < 1 || c->attach > c->n) throw Error("connector attached outside its strands");
        if (layer_source(l) != s_) throw Error("polar word arity mismatch");
        s_ = layer_target(l);
    }
}

int PolarWord::order() const {
    int c = 0;
    for (auto& l : layers_) c += std::holds_alternative<ConnectorLayer>(l);
    return c;
}

bool PolarWord::operator<(const PolarWord& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (s_ != o.s_) return s_ < o.s_;
    return layers_ < o.layers_;
}

std::string PolarWord::str() const {
    std::string s = std::to_string(r_) + "->" + std::to_string(s_) + " {";
    bool first = true;
    for (auto& l : layers_) {
        s += first ? "" : " | ";
        first = false;
        if (auto d = std::get_if<BrauerDiagram>(&l)) s += d->str();
        else {
            auto& c = std::get<ConnectorLayer>(l);
            s += "h" + std::to_string(c.attach) + "/" + std::to_string(c.n);
        }
    }
    return s + "}";
}

PolarWord concat(const PolarWord& upper, const PolarWord& lower) {
    if (upper.r() != lower.s()) throw Error("polar arity mismatch in composition");
    auto layers = lower.layers();
    layers.insert(layers.end(), upper.layers().begin(), upper.layers().end());
    return PolarWord(lower.r(), layers);
}

PolarWord tensor_right(const PolarWord& w, const BrauerDiagram& b) {
    std::vector<Layer> layers;
    if (b != BrauerDiagram::identity(b.r())) layers.push_back(tensor(BrauerDiagram::identity(w.r()), b));
    int k = b.s();
    for (auto& l : w.layers()) {
        if (auto d = std::get_if<BrauerDiagram>(&l)) layers.push_back(tensor(*d, BrauerDiagram::identity(k)));
        else {
            auto c = std::get<ConnectorLayer>(l);
            layers.push_back(ConnectorLayer{c.n + k, c.attach});
        }
    }
    return PolarWord(w.r() + b.r(), layers);
}

PolarElement::PolarElement(const PolarWord& w, const Poly& c) : r_(w.r()), s_(w.s()) { add(w, c); }

int PolarElement::max_order() const {
    int m = 0;
    for (auto& [w, c] : t_) m = std::max(m, w.order());
    return m;
}

void PolarElement::add(const PolarWord& w, const Poly& c) {
    if (w.r() != r_ || w.s() != s_) throw Error("polar arity mismatch in sum");
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

PolarElement& PolarElement::operator+=(const PolarElement& o) {
    if (o.r_ != r_ || o.s_ != s_) throw Error("polar arity mismatch in sum");
    for (auto& [w, c] : o.t_) add(w, c);
    return *this;
}

PolarElement& PolarElement::operator-=(const PolarElement& o) { return *this += -o; }

PolarElement PolarElement::operator-() const {
    PolarElement r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

PolarElement operator*(const Poly& c, const PolarElement& a) {
    PolarElement r(a.r_, a.s_);
    if (c.is_zero()) return r;
    for (auto& [w, x] : a.t_) r.add(w, c * x);
    return r;
}

PolarElement operator*(const PolarElement& a, const PolarElement& b) {
    if (a.r_ != b.s_) throw Error("polar arity mismatch in composition");
    PolarElement r(b.r_, a.s_);
    for (auto& [wa, ca] : a.t_)
        for (auto& [wb, cb] : b.t_) r.add(concat(wa, wb), ca * cb);
    return r;
}

std::string PolarElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : t_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")" + w.str();
    }
    return s;
}

PolarElement tensor_right(const PolarElement& a, const BrauerElement& b) {
    PolarElement r(a.r() + b.r(), a.s() + b.s());
    for (auto& [w, c] : a.terms())
        for (auto& [d, x] : b.terms()) r.add(tensor_right(w, d), c * x);
    return r;
}

PolarElement commutator(const PolarElement& a, const PolarElement& b) { return a * b - b * a; }

namespace {

// Bottom p goes to top 0, bottoms before p shift right by one.
BrauerDiagram cyc(int n, int p) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k < p ? k + 1 : (k == p ? 0 : k);
    return BrauerDiagram::permutation(w);
}

BrauerDiagram cyc_inverse(int n, int p) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k == 0 ? p : (k <= p ? k - 1 : k);
    return BrauerDiagram::permutation(w);
}

// B = (I (x) A) o base, where base is cyc_p or a cup on the first two points.
std::pair<BrauerDiagram, BrauerDiagram> split_free_part(const BrauerDiagram& B) {
    int r = B.r(), n = B.s();
    int x = B.partner(r);
    if (x < r) {
        int p = x;
        int ar = r - 1, as = n - 1;
        std::vector<int> pa(ar + as);
        auto toB = [&](int y) { return y < ar ? (y < p ? y : y + 1) : r + (y - ar) + 1; };
        auto fromB = [&](int z) { return z < r ? (z < p ? z : z - 1) : ar + (z - r - 1); };
        for (int y = 0; y < ar + as; ++y) pa[y] = fromB(B.partner(toB(y)));
        return {cyc(r, p), BrauerDiagram(ar, as, pa)};
    }
    int q = x - r;
    int ar = r + 1, as = n - 1;
    std::vector<int> pa(ar + as);
    int tq = ar + (q - 1);
    auto toB = [&](int y) { return y < ar ? y - 1 : r + (y - ar) + 1; };
    auto fromB = [&](int z) { return z < r ? z + 1 : ar + (z - r - 1); };
    for (int y = 0; y < ar + as; ++y) {
        if (y == 0) pa[y] = tq;
        else if (y == tq) pa[y] = 0;
        else pa[y] = fromB(B.partner(toB(y)));
    }
    return {BrauerDiagram::cup(r, 1), BrauerDiagram(ar, as, pa)};
}

bool is_identity(const BrauerDiagram& d) { return d.r() == d.s() && d == BrauerDiagram::identity(d.r()); }

struct Edge {
    int a, b;
    int kind;  // 0 through, 1 cup (local min), 2 cap (local max)
    int layer;
    bool connector;
};

// Finds one extractable closed component; on success rewrites w and returns its value.
bool extract_closed_component(PolarWord& w, Poly& value) {
    const auto& L = w.layers();
    int K = L.size();
    std::vector<int> sz(K + 1), off(K + 2, 0);
    sz[0] = w.r();
    for (int k = 0; k < K; ++k) sz[k + 1] = layer_target(L[k]);
    for (int k = 0; k <= K; ++k) off[k + 1] = off[k] + sz[k];
    int N = off[K + 1];
    auto node = [&](int k, int p) { return off[k] + p; };
    std::vector<Edge> edges;
    std::vector<int> conn_ordinal(K, -1);
    int ordinal = 0;
    for (int k = 0; k < K; ++k) {
        if (auto d = std::get_if<BrauerDiagram>(&L[k])) {
            int r = d->r();
            for (int x = 0; x < d->size(); ++x) {
                int y = d->partner(x);
                if (y < x) continue;
                int na = x < r ? node(k, x) : node(k + 1, x - r);
                int nb = y < r ? node(k, y) : node(k + 1, y - r);
                int kind = (x < r && y < r) ? 2 : (x >= r && y >= r) ? 1 : 0;
                edges.push_back({na, nb, kind, k, false});
            }
        } else {
            auto c = std::get<ConnectorLayer>(L[k]);
            conn_ordinal[k] = ordinal++;
            for (int p = 0; p < c.n; ++p) edges.push_back({node(k, p), node(k + 1, p), 0, k, p == c.attach - 1});
        }
    }
    std::vector<std::array<int, 2>> inc(N, {-1, -1});
    for (int e = 0; e < (int)edges.size(); ++e)
        for (int v : {edges[e].a, edges[e].b}) (inc[v][0] < 0 ? inc[v][0] : inc[v][1]) = e;
    std::vector<char> seen(N, 0);
    for (int start = 0; start < N; ++start) {
        if (seen[start]) continue;
        // Collect the component.
        std::vector<int> comp{start};
        seen[start] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int e : inc[comp[i]]) {
                if (e < 0) continue;
                for (int v : {edges[e].a, edges[e].b})
                    if (!seen[v]) {
                        seen[v] = 1;
                        comp.push_back(v);
                    }
            }
        bool closed = true;
        for (int v : comp)
            if (v < off[1] || v >= off[K]) closed = false;
        if (!closed) continue;
        std::vector<int> cedges;
        std::set<int> es;
        for (int v : comp)
            for (int e : inc[v]) es.insert(e);
        cedges.assign(es.begin(), es.end());
        int cups = 0, caps = 0;
        std::vector<int> conn_layers;
        for (int e : cedges) {
            cups += edges[e].kind == 1;
            caps += edges[e].kind == 2;
            if (edges[e].connector) conn_layers.push_back(edges[e].layer);
        }
        std::string word;
        if (!conn_layers.empty()) {
            if (cups != 1 || caps != 1) continue;
            std::vector<int> ords;
            for (int k : conn_layers) ords.push_back(conn_ordinal[k]);
            std::sort(ords.begin(), ords.end());
            bool contiguous = true;
            for (std::size_t i = 1; i < ords.size(); ++i) contiguous &= ords[i] == ords[i - 1] + 1;
            if (!contiguous) continue;
            // Walk from the cup upward along one side to the cap, then down.
            int e0 = -1;
            for (int e : cedges)
                if (edges[e].kind == 1) e0 = e;
            std::map<int, char> side;
            int cur = edges[e0].b, e = e0;
            bool ascending = true;
            while (true) {
                int next = inc[cur][0] == e ? inc[cur][1] : inc[cur][0];
                if (next == e0) break;
                if (edges[next].kind == 2) ascending = false;
                if (edges[next].connector) side[edges[next].layer] = ascending ? 'A' : 'B';
                cur = edges[next].a == cur ? edges[next].b : edges[next].a;
                e = next;
            }
            for (auto it = side.rbegin(); it != side.rend(); ++it) word += it->second;
        }
        value = polar::z_loop_value(word);
        // Rebuild without the component.
        std::vector<char> gone(N, 0);
        for (int v : comp) gone[v] = 1;
        std::vector<std::vector<int>> pos(K + 1);
        for (int k = 0; k <= K; ++k) {
            pos[k].assign(sz[k], -1);
            int c = 0;
            for (int p = 0; p < sz[k]; ++p)
                if (!gone[node(k, p)]) pos[k][p] = c++;
        }
        std::vector<Layer> nl;
        for (int k = 0; k < K; ++k) {
            if (auto d = std::get_if<BrauerDiagram>(&L[k])) {
                int r = d->r();
                int nr = std::count_if(pos[k].begin(), pos[k].end(), [](int x) { return x >= 0; });
                int ns = std::count_if(pos[k + 1].begin(), pos[k + 1].end(), [](int x) { return x >= 0; });
                std::vector<int> pa(nr + ns);
                auto mapped = [&](int x) { return x < r ? pos[k][x] : (pos[k + 1][x - r] < 0 ? -1 : nr + pos[k + 1][x - r]); };
                for (int x = 0; x < d->size(); ++x) {
                    int mx = mapped(x);
                    if (mx >= 0) pa[mx] = mapped(d->partner(x));
                }
                nl.push_back(BrauerDiagram(nr, ns, pa));
            } else {
                auto c = std::get<ConnectorLayer>(L[k]);
                if (gone[node(k, c.attach - 1)]) continue;
                int nn = std::count_if(pos[k].begin(), pos[k].end(), [](int x) { return x >= 0; });
                nl.push_back(ConnectorLayer{nn, pos[k][c.attach - 1] + 1});
            }
        }
        w = PolarWord(w.r(), nl);
        return true;
    }
    return false;
}

PolarElement normalize_word(PolarWord w, Poly c) {
    Poly d = delta();
    while (true) {
        std::vector<BrauerDiagram> Bs;
        std::vector<int> cn;
        BrauerDiagram cur = BrauerDiagram::identity(w.r());
        for (auto& l : w.layers()) {
            if (auto bd = std::get_if<BrauerDiagram>(&l)) {
                auto comp = compose(*bd, cur);
                cur = comp.d;
                if (comp.loops) c *= d.pow(comp.loops);
            } else {
                auto cl = std::get<ConnectorLayer>(l);
                auto comp = compose(cyc(cl.n, cl.attach - 1), cur);
                if (comp.loops) c *= d.pow(comp.loops);
                Bs.push_back(comp.d);
                cn.push_back(cl.n);
                cur = cyc_inverse(cl.n, cl.attach - 1);
            }
        }
        Bs.push_back(cur);
        int nc = cn.size();
        for (int j = 0; j < nc; ++j) {
            auto [base, A] = split_free_part(Bs[j]);
            Bs[j] = base;
            cn[j] = base.s();
            auto comp = compose(Bs[j + 1], tensor(BrauerDiagram::identity(1), A));
            Bs[j + 1] = comp.d;
            if (comp.loops) c *= d.pow(comp.loops);
        }
        if (c.is_zero()) return PolarElement(w.r(), w.s());
        std::vector<Layer> layers;
        for (int j = 0; j <= nc; ++j) {
            if (!is_identity(Bs[j])) layers.push_back(Bs[j]);
            if (j < nc) layers.push_back(ConnectorLayer{cn[j], 1});
        }
        w = PolarWord(w.r(), layers);
        Poly v;
        if (!extract_closed_component(w, v)) break;
        c *= v;
        if (c.is_zero()) return PolarElement(w.r(), w.s());
    }
    return PolarElement(w, polar::eliminate_odd_z(c));
}

}  // namespace

PolarElement normalize(const PolarElement& e) {
    PolarElement r(e.r(), e.s());
    for (auto& [w, c] : e.terms()) r += normalize_word(w, c);
    return r;
}

PolarElement compose(const PolarElement& upper, const PolarElement& lower) { return normalize(upper * lower); }

namespace polar {

PolarElement iota(const BrauerDiagram& d) {
    if (is_identity(d)) return PolarElement(PolarWord(d.r()));
    return PolarElement(PolarWord(d.r(), {d}));
}

PolarElement iota(const BrauerElement& a) {
    PolarElement r(a.r(), a.s());
    for (auto& [d, c] : a.terms()) r += c * iota(d);
    return r;
}

PolarElement I(int r) { return PolarElement(PolarWord(r)); }

PolarElement H() { return PolarElement(PolarWord(1, {ConnectorLayer{1, 1}})); }

PolarElement H(int r, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > r || i == j) throw Error("H_ij index out of range");
    if (i == 0) return PolarElement(PolarWord(r, {ConnectorLayer{r, j}}));
    return iota(brauer::H(r, i, j));
}

PolarElement Theta(int r, int j) {
    PolarElement t(r, r);
    for (int a = 0; a < j; ++a) t += H(r, a, j);
    return t;
}

PolarElement Pi() { return iota(BrauerDiagram::cap(2, 1)); }
PolarElement Coprod() { return iota(BrauerDiagram::cup(0, 1)); }

PolarElement power(const PolarElement& a, int l) {
    PolarElement p = I(a.r());
    for (int i = 0; i < l; ++i) p = a * p;
    return p;
}

PolarElement Z(int l) { return Zword({l}); }

PolarElement Zword(const std::vector<int>& k) {
    PolarElement body = I(2);
    PolarElement h = tensor_right(H(), brauer::id(1));
    PolarElement x = iota(BrauerDiagram::swap(2, 1));
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) body = body * x;
        body = body * power(h, k[i]);
    }
    return Pi() * body * Coprod();
}

PolarElement transpose_power(int l) {
    PolarElement lower = iota(BrauerDiagram::cup(1, 1));
    PolarElement upper = iota(BrauerDiagram::cap(3, 1));
    PolarElement mid = tensor_right(power(H(), l), brauer::s(2, 1));
    return upper * mid * lower;
}

namespace {

std::map<int, Poly>& varpi_z_cache() {
    static std::map<int, Poly> cache;
    return cache;
}

BrauerElement varpi_layer(const Layer& l) {
    if (auto d = std::get_if<BrauerDiagram>(&l)) return BrauerElement(tensor(BrauerDiagram::identity(1), *d));
    auto c = std::get<ConnectorLayer>(l);
    return brauer::H(c.n + 1, 1, c.attach + 1);
}

std::map<int, Poly> z_bindings(const Poly& p, const std::function<Poly(int)>& f) {
    std::map<int, Poly> b;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors())
            if (var::is_z(v) && !b.count(v)) b[v] = f(var::z_index(v));
    return b;
}

}  // namespace

Poly varpi_z(int k) {
    auto& cache = varpi_z_cache();
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    BrauerElement x = brauer::cup(1, 2);
    BrauerElement h = brauer::H(3, 1, 2);
    for (int i = 0; i < k; ++i) x = h * x;
    x = brauer::cap(3, 2) * x;
    Poly v = x.coeff(BrauerDiagram::identity(1));
    cache[k] = v;
    return v;
}

BrauerElement varpi(const PolarElement& e) {
    BrauerElement out(e.r() + 1, e.s() + 1);
    for (auto& [w, c] : e.terms()) {
        BrauerElement x = brauer::id(w.r() + 1);
        for (auto& l : w.layers()) x = varpi_layer(l) * x;
        Poly cc = c.substitute(z_bindings(c, varpi_z));
        out += cc * x;
    }
    return out;
}

namespace {

std::string swapped(std::string w) {
    for (auto& ch : w) ch = ch == 'A' ? 'B' : 'A';
    return w;
}

}  // namespace

Poly z_loop_value(const std::string& w) {
    static std::map<std::string, Poly> memo;
    if (w.empty()) return delta();
    if (w.find('A') == std::string::npos || w.find('B') == std::string::npos) return zvar(w.size());
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Poly res;
    std::size_t i = w.find("AB");
    if (i != std::string::npos) {
        std::string u = w.substr(0, i), v = w.substr(i + 2), sv = swapped(v);
        res = z_loop_value(u + "BA" + v) + z_loop_value(u + "B" + sv) - z_loop_value(u + "A" + sv) -
              z_loop_value(u) * z_loop_value("A" + v) + z_loop_value(u + "A") * z_loop_value(v);
    } else {
        res = -z_loop_value("A" + w.substr(1));
    }
    memo[w] = res;
    return res;
}

Poly z_word_reduce(const std::vector<int>& k) {
    std::string w;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 1) throw Error("z-word blocks must be positive");
        w += std::string(k[i], i % 2 ? 'B' : 'A');
    }
    return eliminate_odd_z(z_loop_value(w));
}

Poly ht_transpose_poly(int l) {
    static std::vector<Poly> memo{Poly(1)};
    Poly h = Poly::var(var::h);
    while ((int)memo.size() <= l) {
        int k = memo.size() - 1;
        Poly zk = k == 0 ? delta() : zvar(k);
        memo.push_back(memo[k] * (Poly(1) - delta() - h) + (zk - h.pow(k)));
    }
    return memo[l];
}

Poly close_h(const Poly& p) {
    Poly r;
    for (auto& [m, c] : p.terms()) {
        int e = m.exponent(var::h);
        Poly t = Poly::term(m.without(var::h), c);
        r += t * (e == 0 ? delta() : zvar(e));
    }
    return r;
}

Poly odd_z_polynomial(int l) {
    if (l < 1 || l % 2 == 0) throw Error("odd_z_polynomial needs odd l >= 1");
    static std::map<int, Poly> memo;
    if (l == 1) return Poly();
    auto it = memo.find(l);
    if (it != memo.end()) return it->second;
    Poly rest = close_h(ht_transpose_poly(l)) + zvar(l);
    Poly v = eliminate_odd_z(rest * Q(1, 2));
    memo[l] = v;
    return v;
}

Poly eliminate_odd_z(const Poly& p) {
    std::map<int, Poly> b;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors())
            if (var::is_z(v) && var::z_index(v) % 2 == 1 && !b.count(v)) b[v] = odd_z_polynomial(var::z_index(v));
    return b.empty() ? p : p.substitute(b);
}

std::vector<Relator> relation_suites(int r, int max_power) {
    if (r < 1 || r > 4) throw Error("relation suites are provided for 1 <= r <= 4");
    std::vector<Relator> out;
    auto name2 = [](const std::string& f, int a, int b) { return f + "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    PolarElement Ir = I(r);
    BrauerElement pad = brauer::id(r - 1);
    out.push_back({"skew symmetry", "H^T + H", tensor_right(transpose_power(1) + H(), pad)});
    out.push_back({"quadratic transpose", "(H^2)^T - H^2 - (delta-2)H",
                   tensor_right(transpose_power(2) - power(H(), 2) - (delta() - Poly(2)) * H(), pad)});
    out.push_back({"z2 central", "(Z2 (x) I)H - H(Z2 (x) I)",
                   tensor_right(commutator(tensor_right(Z(2), brauer::id(1)), H()), pad)});
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            if (i == j) continue;
            out.push_back({"four-term", name2("[H0i, H0j + Hij]", i, j), commutator(H(r, 0, i), H(r, 0, j) + H(r, i, j))});
        }
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            auto h0i = H(r, 0, i), h0j = H(r, 0, j), hij = H(r, i, j);
            out.push_back({"lemma [H01+H02, H12]", name2("[H0i + H0j, Hij]", i, j), commutator(h0i + h0j, hij)});
            out.push_back({"corollary four-term forms", name2("[H0i,Hij] - [Hij,H0j]", i, j),
                           commutator(h0i, hij) - commutator(hij, h0j)});
            out.push_back({"corollary four-term forms", name2("[Hij,H0j] - [H0j,H0i]", i, j),
                           commutator(hij, h0j) - commutator(h0j, h0i)});
            out.push_back({"corollary four-term forms", name2("[H0j, H0i + Hij]", i, j), commutator(h0j, h0i + hij)});
        }
    for (auto& rel : chord::relation_instances(r + 1)) {
        auto t = [&](int a, int b) { return H(r, a - 1, b - 1); };
        PolarElement lhs, rhs;
        switch (rel.kind) {
            case chord::Kind::disjoint:
                lhs = t(rel.i, rel.j);
                rhs = t(rel.k, rel.l);
                break;
            case chord::Kind::left_four_term:
                lhs = t(rel.i, rel.j);
                rhs = t(rel.i, rel.k) + t(rel.j, rel.k);
                break;
            case chord::Kind::right_four_term:
                lhs = t(rel.i, rel.j) + t(rel.i, rel.k);
                rhs = t(rel.j, rel.k);
                break;
        }
        out.push_back({"chord image t_ij -> H_{i-1,j-1}", rel.str(), commutator(lhs, rhs)});
    }
    std::vector<PolarElement> th(r + 1);
    for (int j = 1; j <= r; ++j) th[j] = Theta(r, j);
    if (r >= 2) {
        PolarElement e1 = iota(brauer::e(r, 1));
        for (int l = 1; l <= max_power; ++l)
            out.push_back({"JM-1", "e1 Theta1^" + std::to_string(l) + " e1 - Z" + std::to_string(l) + " e1",
                           e1 * power(th[1], l) * e1 - eliminate_odd_z(zvar(l)) * e1});
    }
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) out.push_back({"JM-2", name2("[Theta_i, Theta_j]", i, j), commutator(th[i], th[j])});
    Poly one_minus_delta = Poly(1) - delta();
    for (int k = 1; k < r; ++k) {
        PolarElement sk = iota(brauer::s(r, k)), ek = iota(brauer::e(r, k));
        for (int j = 1; j <= r; ++j) {
            if (j == k || j == k + 1) continue;
            out.push_back({"JM-3", name2("[s_k, Theta_j]", k, j), commutator(sk, th[j])});
            out.push_back({"JM-4", name2("[e_k, Theta_j]", k, j), commutator(ek, th[j])});
        }
        std::string ks = std::to_string(k);
        out.push_back({"JM-5", "s" + ks + " Theta_k - Theta_{k+1} s" + ks + " - e" + ks + " + I",
                       sk * th[k] - th[k + 1] * sk - ek + Ir});
        out.push_back({"JM-6", "Theta_k s" + ks + " - s" + ks + " Theta_{k+1} - e" + ks + " + I",
                       th[k] * sk - sk * th[k + 1] - ek + Ir});
        out.push_back({"JM-7", "e" + ks + "(Theta_k + Theta_{k+1}) - (1-delta)e" + ks,
                       ek * (th[k] + th[k + 1]) - one_minus_delta * ek});
        out.push_back({"JM-8", "(Theta_k + Theta_{k+1})e" + ks + " - (1-delta)e" + ks,
                       (th[k] + th[k + 1]) * ek - one_minus_delta * ek});
    }
    return out;
}

Report varpi_relations(int r) {
    Report rep{"relators under varpi, r=" + std::to_string(r), {}};
    for (auto& rel : relation_suites(r)) {
        BrauerElement v = varpi(rel.value);
        rep.add(rel.family + ": " + rel.name, v.is_zero(), v.is_zero() ? "" : v.str());
    }
    return rep;
}

}  // namespace polar

}  // namespace pbr
