#include "pbr/functors.hpp"

#include "pbr/atl.hpp"

#include <algorithm>
#include <numeric>

namespace pbr {

namespace {

inline int sgn(int p) { return (p & 1) ? -1 : 1; }

DVec flatten(const DMat& a) {
    DVec v;
    for (auto& row : a) v.insert(v.end(), row.begin(), row.end());
    return v;
}

// T, X, Y of sp2 as matrices on C^{0|2}.
std::vector<DMat> sp2_triple() {
    DMat T = dense::zeros(2, 2), X = dense::zeros(2, 2), Y = dense::zeros(2, 2);
    T[0][0] = 1;
    T[1][1] = -1;
    X[0][1] = 1;
    Y[1][0] = 1;
    return {T, X, Y};
}

Module sp2_module(const std::string& name, const Q& lambda, int depth, bool truncated) {
    Module M;
    M.name = name;
    M.m = 0;
    M.n = 1;
    M.dim = depth + 1;
    M.par.assign(M.dim, 0);
    M.truncated = truncated;
    M.depth = depth;
    M.lambda = lambda;
    DMat T = dense::zeros(M.dim, M.dim), X = T, Y = T;
    for (int k = 0; k <= depth; ++k) {
        T[k][k] = lambda - 2 * k;
        if (k < depth) Y[k + 1][k] = 1;
        if (k > 0) X[k - 1][k] = Q(k) * (lambda - k + 1);
    }
    SuperSpace V = build_space(0, 1);
    auto L = super::lie_basis(V);
    auto tri = sp2_triple();
    std::vector<DVec> basis;
    for (auto& x : tri) basis.push_back(flatten(x));
    for (auto& J : L.mats) {
        DVec c;
        if (!dense::coordinates(basis, flatten(J), c)) throw Error("sp2 generator outside span of T, X, Y");
        DMat a = dense::zeros(M.dim, M.dim);
        a = dense::add(a, T, c[0]);
        a = dense::add(a, X, c[1]);
        a = dense::add(a, Y, c[2]);
        M.act.push_back(a);
    }
    return M;
}

// F of a single diagram on (head) (x) V^r: sort bottoms, cap, route through strands, cup, place tops.
SMat diagram_operator(const SuperSpace& V, const std::vector<int>& head, const BrauerDiagram& d) {
    int off = head.empty() ? 0 : 1;
    int r = d.r(), s = d.s();
    TensorSpace T = TensorSpace::power(V, r, head);
    SMat op = SMat::identity(T.dim());
    std::vector<int> thr;
    std::vector<std::pair<int, int>> caps, cups;
    for (int b = 0; b < r; ++b) {
        int p = d.partner(b);
        if (p >= r) thr.push_back(b);
        else if (b < p) caps.push_back({b, p});
    }
    int t = thr.size();
    auto is_id = [](const std::vector<int>& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != (int)i) return false;
        return true;
    };
    std::vector<int> w(r);
    for (int i = 0; i < t; ++i) w[thr[i]] = i;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        w[caps[j].first] = t + 2 * j;
        w[caps[j].second] = t + 2 * j + 1;
    }
    if (!is_id(w)) op = T.permute(off, w) * op;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        op = super::cap(T, V, off + t) * op;
        T = T.without(off + t, 2);
    }
    std::vector<int> tops;
    for (int b : thr) tops.push_back(d.partner(b) - r);
    std::vector<int> sorted = tops;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pi(t);
    for (int i = 0; i < t; ++i) pi[i] = std::lower_bound(sorted.begin(), sorted.end(), tops[i]) - sorted.begin();
    if (!is_id(pi)) op = T.permute(off, pi) * op;
    for (int x = 0; x < s; ++x) {
        int p = d.partner(r + x);
        if (p >= r && x < p - r) cups.push_back({x, p - r});
    }
    for (std::size_t j = 0; j < cups.size(); ++j) {
        op = super::cup(T, V, off + t + 2 * j) * op;
        T = T.inserted(off + t + 2 * j, {V.par, V.par});
    }
    std::vector<int> wt(s);
    for (int i = 0; i < t; ++i) wt[i] = sorted[i];
    for (std::size_t j = 0; j < cups.size(); ++j) {
        wt[t + 2 * j] = cups[j].first;
        wt[t + 2 * j + 1] = cups[j].second;
    }
    if (!is_id(wt)) op = T.permute(off, wt) * op;
    return op;
}

Q constant_of(const Poly& p) {
    if (!p.is_constant()) throw Error("coefficient is not a scalar after substitution: " + p.str());
    return p.constant_term();
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

DMat Module::action(const super::LieBasis& L, const DMat& x) const {
    DVec c = L.coords(x);
    DMat out = dense::zeros(dim, dim);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out = dense::add(out, act[i], c[i]);
    return out;
}

namespace modules {

Module natural(int m, int n) {
    SuperSpace V = build_space(m, n);
    Module M;
    M.name = "natural(" + std::to_string(m) + "," + std::to_string(n) + ")";
    M.m = m;
    M.n = n;
    M.dim = V.dim;
    M.par = V.par;
    M.act = super::lie_basis(V).mats;
    return M;
}

Module trivial(int m, int n) {
    SuperSpace V = build_space(m, n);
    Module M;
    M.name = "trivial(" + std::to_string(m) + "," + std::to_string(n) + ")";
    M.m = m;
    M.n = n;
    M.dim = 1;
    M.par = {0};
    M.act.assign(super::lie_basis(V).size(), dense::zeros(1, 1));
    return M;
}

Module adjoint(int m, int n) {
    SuperSpace V = build_space(m, n);
    auto L = super::lie_basis(V);
    Module M;
    M.name = "adjoint(" + std::to_string(m) + "," + std::to_string(n) + ")";
    M.m = m;
    M.n = n;
    M.dim = L.size();
    M.par = L.par;
    for (int i = 0; i < L.size(); ++i) {
        DMat a = dense::zeros(M.dim, M.dim);
        for (int j = 0; j < L.size(); ++j) {
            DVec c = L.coords(super::supercommutator(L.mats[i], L.par[i], L.mats[j], L.par[j]));
            for (int k = 0; k < M.dim; ++k) a[k][j] = c[k];
        }
        M.act.push_back(a);
    }
    return M;
}

Module sp2_simple(int lambda) {
    if (lambda < 0) throw Error("sp2_simple needs lambda >= 0");
    return sp2_module("L(" + std::to_string(lambda) + ")", Q(lambda), lambda, false);
}

Module sp2_truncated_verma(const Q& lambda, int depth) {
    if (depth < 0) throw Error("negative truncation depth");
    return sp2_module("M(" + to_string(lambda) + ";" + std::to_string(depth) + ")", lambda, depth, true);
}

std::vector<Module> default_suite() {
    return {natural(3, 0), natural(0, 1), natural(1, 1), sp2_simple(2), adjoint(0, 1)};
}

}  // namespace modules

Report module_check(const Module& M) {
    SuperSpace V = build_space(M.m, M.n);
    auto L = super::lie_basis(V);
    Report rep{"module axioms " + M.name, {}};
    int window = M.truncated ? M.depth - 1 : M.dim - 1;
    for (int i = 0; i < L.size(); ++i)
        for (int j = 0; j < L.size(); ++j) {
            DMat lhs = super::supercommutator(M.act[i], L.par[i], M.act[j], L.par[j]);
            DMat rhs = M.action(L, super::supercommutator(L.mats[i], L.par[i], L.mats[j], L.par[j]));
            bool ok = true;
            for (int r = 0; r < M.dim; ++r)
                for (int c = 0; c <= window; ++c) ok &= lhs[r][c] == rhs[r][c];
            if (!ok) rep.add("[" + std::to_string(i) + "," + std::to_string(j) + "]", false, "bracket mismatch");
        }
    if (rep.checks.empty()) rep.add("all brackets", true, std::to_string(L.size()) + " generators");
    return rep;
}

SMat evaluate_brauer(const BrauerDiagram& d, const SuperSpace& V) { return diagram_operator(V, {}, d); }

SMat evaluate_brauer(const BrauerElement& a, const SuperSpace& V) {
    SMat out(ipow(V.dim, a.s()), ipow(V.dim, a.r()));
    std::map<int, Poly> b{{var::delta, Poly(Q(V.sdim))}};
    for (auto& [d, c] : a.terms()) out += diagram_operator(V, {}, d) * constant_of(c.substitute(b));
    return out;
}

FunctorContext::FunctorContext(Module M) : M_(std::move(M)), V_(build_space(M_.m, M_.n)), L_(super::lie_basis(V_)) {}

SMat FunctorContext::brauer_layer(const BrauerDiagram& d) {
    auto it = brauer_cache_.find(d);
    if (it != brauer_cache_.end()) return it->second;
    SMat op = diagram_operator(V_, M_.par, d);
    brauer_cache_[d] = op;
    return op;
}

SMat FunctorContext::connector(int n, int attach) {
    auto key = std::make_pair(n, attach);
    auto it = conn_cache_.find(key);
    if (it != conn_cache_.end()) return it->second;
    TensorSpace T = TensorSpace::power(V_, n, M_.par);
    SMat t(T.dim(), T.dim());
    for (int a = 0; a < V_.dim; ++a)
        for (int b = 0; b < V_.dim; ++b) {
            int p = super::parity(V_, a, b);
            DMat xab = super::X(V_, a, b), xba = super::X(V_, b, a);
            if (dense::is_zero(xab) || dense::is_zero(xba)) continue;
            DMat mab = M_.action(L_, xab);
            if (dense::is_zero(mab)) continue;
            t += (T.slot(0, mab, p) * T.slot(attach, xba, p)) * Q(sgn(V_.par[b]));
        }
    t *= Q(1, 2);
    conn_cache_[key] = t;
    return t;
}

Q FunctorContext::z_value(int k) {
    auto it = z_cache_.find(k);
    if (it != z_cache_.end()) return it->second;
    if (M_.truncated && k > M_.depth) throw Error("truncation depth too small for Z_" + std::to_string(k));
    TensorSpace T0 = TensorSpace::power(V_, 0, M_.par);
    TensorSpace T2 = TensorSpace::power(V_, 2, M_.par);
    SMat op = super::cup(T0, V_, 1);
    SMat h = connector(2, 1);
    for (int i = 0; i < k; ++i) op = h * op;
    op = super::cap(T2, V_, 1) * op;
    Q v = op.at(0, 0);
    int window = M_.truncated ? M_.depth - k : M_.dim - 1;
    for (int i = 0; i < M_.dim; ++i)
        for (auto& [j, x] : op.row(i)) {
            if (j > window) continue;
            if (x != (i == j ? v : Q(0)))
                throw Error("F_M(Z_" + std::to_string(k) + ") is not scalar on " + M_.name);
        }
    for (int j = 0; j <= window; ++j)
        if (op.at(j, j) != v) throw Error("F_M(Z_" + std::to_string(k) + ") is not scalar on " + M_.name);
    z_cache_[k] = v;
    return v;
}

Q FunctorContext::scalar(const Poly& p) {
    std::map<int, Poly> b{{var::delta, Poly(delta_value())}};
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors())
            if (var::is_z(v) && !b.count(v)) b[v] = Poly(z_value(var::z_index(v)));
    return constant_of(p.substitute(b));
}

RepOperator FunctorContext::evaluate(const PolarWord& w) {
    RepOperator op;
    op.head_dim = M_.dim;
    op.tail_dim = ipow(V_.dim, w.r());
    op.mat = SMat::identity(M_.dim * op.tail_dim);
    for (auto& l : w.layers()) {
        if (auto d = std::get_if<BrauerDiagram>(&l)) op.mat = brauer_layer(*d) * op.mat;
        else {
            auto c = std::get<ConnectorLayer>(l);
            op.mat = connector(c.n, c.attach) * op.mat;
        }
    }
    if (M_.truncated) {
        op.margin = M_.depth - w.order();
        if (op.margin < 0) throw Error("truncation margin exhausted on " + M_.name);
    }
    return op;
}

RepOperator FunctorContext::evaluate(const PolarElement& e) {
    RepOperator out;
    out.head_dim = M_.dim;
    out.tail_dim = ipow(V_.dim, e.r());
    out.mat = SMat(M_.dim * ipow(V_.dim, e.s()), M_.dim * out.tail_dim);
    if (M_.truncated) out.margin = M_.depth;
    for (auto& [w, c] : e.terms()) {
        RepOperator op = evaluate(w);
        out.mat += op.mat * scalar(c);
        if (M_.truncated) out.margin = std::min(out.margin, op.margin);
    }
    return out;
}

SMat FunctorContext::diagonal_action(int r, int generator) {
    TensorSpace T = TensorSpace::power(V_, r, M_.par);
    int p = L_.par[generator];
    SMat out = T.slot(0, M_.act[generator], p);
    for (int j = 1; j <= r; ++j) out += T.slot(j, L_.mats[generator], p);
    return out;
}

RepOperator evaluate_polar(const PolarElement& w, const Module& M) {
    FunctorContext ctx(M);
    return ctx.evaluate(w);
}

bool is_zero_in_window(const RepOperator& op) {
    if (op.margin < 0) return op.mat.is_zero();
    for (int i = 0; i < op.mat.rows(); ++i)
        for (auto& [j, x] : op.mat.row(i))
            if (j / op.tail_dim <= op.margin) return false;
    return true;
}

Verdict oracle_equal(const PolarElement& a, const PolarElement& b, const std::vector<Module>& suite) {
    Verdict v;
    v.varpi_equal = polar::varpi(a) == polar::varpi(b);
    PolarElement d = a - b;
    std::string names;
    for (auto& M : suite) {
        FunctorContext ctx(M);
        if (!is_zero_in_window(ctx.evaluate(d))) {
            v.equal = false;
            v.text = "distinct (separated by " + M.name + ")";
            v.text += v.varpi_equal ? "; varpi images agree" : "; varpi images differ";
            return v;
        }
        names += (names.empty() ? "" : ", ") + M.name;
    }
    v.equal = true;
    v.text = "equal(oracle: " + names + ")";
    v.text += v.varpi_equal ? "; varpi images agree" : "; varpi images differ";
    return v;
}

Report quartet_check(int r, int m, int n) {
    SuperSpace V = build_space(m, n);
    TensorSpace T = TensorSpace::power(V, r);
    Report rep{"quartet r=" + std::to_string(r) + " (m,2n)=(" + std::to_string(m) + "," + std::to_string(2 * n) + ")", {}};
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            SMat lhs = evaluate_brauer(brauer::H(r, i, j), V);
            SMat rhs = super::t_action(T, V, i - 1, j - 1);
            rep.add("H" + std::to_string(i) + std::to_string(j) + " = C" + std::to_string(i) + std::to_string(j),
                    lhs == rhs, lhs == rhs ? "" : "matrices differ");
        }
    return rep;
}

CharIdentity char_identity_numeric(const Module& M) {
    if (M.truncated) throw Error("characteristic identity needs a finite-dimensional module");
    FunctorContext ctx(M);
    SMat E = ctx.connector(1, 1);
    std::vector<Q> rest;
    CharIdentity out;
    out.roots = dense::rational_roots(dense::charpoly(E.to_dense()), &rest);
    SMat prod = SMat::identity(E.rows());
    for (auto& [x, mult] : out.roots) {
        (void)mult;
        prod = (E - SMat::identity(E.rows()) * x) * prod;
        ++out.degree;
    }
    out.product_vanishes = rest.size() <= 1 && prod.is_zero();
    return out;
}

Report char_identity_report(const Module& M, const std::vector<Q>& expected_roots) {
    Report rep{"characteristic identity on " + M.name + " (x) V", {}};
    CharIdentity ci = char_identity_numeric(M);
    std::vector<Q> got;
    std::string s;
    for (auto& [x, k] : ci.roots) {
        got.push_back(x);
        s += (s.empty() ? "" : ", ") + to_string(x) + "^" + std::to_string(k);
    }
    std::vector<Q> want = expected_roots;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    rep.add("eigenvalues", got == want, "{" + s + "}");
    rep.add("product of (E - e_i) vanishes", ci.product_vanishes, "degree " + std::to_string(ci.degree));
    return rep;
}

PolarElement witness_diagram(int t) {
    std::vector<Layer> layers;
    for (int k = t; k >= 1; --k) {
        layers.push_back(ConnectorLayer{2 * k, 1});
        layers.push_back(BrauerDiagram::cap(2 * k, 1));
    }
    return PolarElement(PolarWord(2 * t, layers));
}

namespace {

DVec apply_word(FunctorContext& ctx, const PolarWord& w, DVec v) {
    for (auto& l : w.layers()) {
        if (auto d = std::get_if<BrauerDiagram>(&l)) v = ctx.brauer_layer(*d).apply(v);
        else {
            auto c = std::get<ConnectorLayer>(l);
            v = ctx.connector(c.n, c.attach).apply(v);
        }
    }
    return v;
}

DVec apply_polar(FunctorContext& ctx, const PolarElement& e, const DVec& v) {
    DVec out(ctx.module().dim, Q(0));
    for (auto& [w, c] : e.terms()) {
        if (w.order() > ctx.module().depth) throw Error("truncation margin exhausted on " + ctx.module().name);
        DVec x = apply_word(ctx, w, v);
        Q k = ctx.scalar(c);
        for (size_t i = 0; i < out.size(); ++i) out[i] += k * x[i];
    }
    return out;
}

bool zero_vec(const DVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

std::string vec_str(const DVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s += (s.empty() ? "" : " + ") + to_string(v[i]) + " m" + std::to_string(i);
    return s.empty() ? "0" : s;
}

}  // namespace

Report tlb_witness(int t, const Q& lambda, int depth) {
    if (depth < t + 2) throw Error("tlb_witness needs depth >= t + 2");
    Report rep{"TLB witness t=" + std::to_string(t) + " lambda=" + to_string(lambda) + " depth=" + std::to_string(depth), {}};
    FunctorContext ctx(modules::sp2_truncated_verma(lambda, depth));
    int n = 2 * t, tail = ipow(ctx.space().dim, n);
    // m_0 (x) v (x) ... (x) v with v the second basis vector; input depth 0 lies in every window.
    DVec in(ctx.module().dim * tail, Q(0));
    int idx = 0;
    for (int k = 0; k < n; ++k) idx = idx * ctx.space().dim + 1;
    in[idx] = 1;

    DVec want(ctx.module().dim, Q(0));
    want[t] = Q(t % 2 ? -1 : 1) * Q(1 << t);
    DVec got = apply_polar(ctx, witness_diagram(t), in);
    rep.add("witness gives (-2)^t m_t", got == want, vec_str(got));

    int bad = 0, tried = 0;
    for (auto& d : atl::standard_basis(n, 0)) {
        if (d.connectors() >= t) continue;
        ++tried;
        if (!zero_vec(apply_polar(ctx, atl::lift(d), in))) {
            ++bad;
            rep.add("lower competitor " + d.str(), false, "nonzero");
        }
    }
    for (int i = 1; i + 1 <= n; ++i) {
        auto cap = PolarElement(PolarWord(n, {BrauerDiagram::cap(n, i)}));
        PolarElement c = compose(witness_diagram(t - 1), cap);
        ++tried;
        DVec x = apply_polar(ctx, c, in);
        if (!zero_vec(x)) {
            ++bad;
            rep.add("cap competitor at " + std::to_string(i), false, vec_str(x));
        }
    }
    rep.add("competitors vanish", bad == 0, std::to_string(tried) + " diagrams");
    return rep;
}

Report atl_factorization_check(const std::vector<int>& lambdas) {
    Report rep{"factorization through ATL(-2) and TLB(-2, lambda)", {}};
    SuperSpace V = build_space(0, 1);
    // s -> -1 + (2/delta) e at delta = -2.
    BrauerElement theta = brauer::s(2, 1) + brauer::id(2) + brauer::e(2, 1);
    SMat f = evaluate_brauer(theta, V);
    rep.add("F(s + 1 - (2/delta) e) = 0 on V (x) V", f.is_zero(), std::to_string(f.rows() * f.cols()) + " entries");
    for (int l : lambdas) {
        FunctorContext ctx(modules::sp2_simple(l));
        Q z2 = ctx.z_value(2);
        Q want = Q(-2 * l * (l + 2));
        rep.add("F_L(" + std::to_string(l) + ")(Z2) = -2 lambda(lambda+2)", z2 == want,
                "got " + to_string(z2) + ", want " + to_string(want));
    }
    return rep;
}

}  // namespace pbr
