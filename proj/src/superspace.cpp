#include "pbr/superspace.hpp"

#include <algorithm>

namespace pbr {

namespace {
inline int sgn(int p) { return (p & 1) ? -1 : 1; }
}  // namespace

DVec SuperSpace::lower_vector(int a) const {
    DVec v(dim, Q(0));
    for (int b = 0; b < dim; ++b) v[b] = g[a][b];
    return v;
}

SuperSpace build_space(int m, int n) {
    if (m < 0 || n < 0 || m + 2 * n < 1) throw Error("superspace needs m + 2n >= 1");
    SuperSpace V;
    V.m = m;
    V.n = n;
    V.dim = m + 2 * n;
    V.sdim = m - 2 * n;
    V.par.assign(V.dim, 0);
    for (int i = m; i < V.dim; ++i) V.par[i] = 1;
    V.gInv = dense::zeros(V.dim, V.dim);
    for (int i = 0; i < m; ++i) V.gInv[i][i] = 1;
    for (int i = 0; i < n; ++i) {
        V.gInv[m + i][m + n + i] = 1;
        V.gInv[m + n + i][m + i] = -1;
    }
    V.g = dense::inverse(V.gInv);
    return V;
}

namespace super {

DMat unit(const SuperSpace& V, int c, int b) {
    DMat u = dense::zeros(V.dim, V.dim);
    u[c][b] = 1;
    return u;
}

DMat unit_lower(const SuperSpace& V, int a, int b) {
    DMat u = dense::zeros(V.dim, V.dim);
    DVec ea = V.lower_vector(a);
    for (int d = 0; d < V.dim; ++d) u[d][b] = ea[d];
    return u;
}

DMat J(const SuperSpace& V, int a, int b) {
    return dense::add(unit_lower(V, a, b), unit_lower(V, b, a), Q(-sgn(V.par[a] * V.par[b])));
}

DMat X(const SuperSpace& V, int a, int b) {
    DMat x = dense::zeros(V.dim, V.dim);
    for (int c = 0; c < V.dim; ++c)
        if (V.gInv[a][c] != 0) x = dense::add(x, J(V, c, b), V.gInv[a][c]);
    return x;
}

namespace {
DVec flatten(const DMat& a) {
    DVec v;
    for (auto& row : a) v.insert(v.end(), row.begin(), row.end());
    return v;
}
}  // namespace

DVec LieBasis::coords(const DMat& x) const {
    std::vector<DVec> b;
    for (auto& m : mats) b.push_back(flatten(m));
    DVec c;
    if (!dense::coordinates(b, flatten(x), c)) throw Error("matrix outside the Lie superalgebra");
    return c;
}

LieBasis lie_basis(const SuperSpace& V) {
    LieBasis L;
    for (int a = 0; a < V.dim; ++a)
        for (int b = a; b < V.dim; ++b) {
            if (a == b && !V.par[a]) continue;
            L.index.push_back({a, b});
            L.mats.push_back(J(V, a, b));
            L.par.push_back(parity(V, a, b));
        }
    return L;
}

int expected_lie_dim(int m, int n) { return m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n; }

DMat supercommutator(const DMat& a, int pa, const DMat& b, int pb) {
    return dense::add(dense::mul(a, b), dense::mul(b, a), Q(-sgn(pa * pb)));
}

}  // namespace super

TensorSpace::TensorSpace(std::vector<std::vector<int>> factors) : f_(std::move(factors)) {
    dim_ = 1;
    for (auto& f : f_) dim_ *= (int)f.size();
}

TensorSpace TensorSpace::power(const SuperSpace& V, int k, const std::vector<int>& head) {
    std::vector<std::vector<int>> f;
    if (!head.empty()) f.push_back(head);
    for (int i = 0; i < k; ++i) f.push_back(V.par);
    return TensorSpace(f);
}

std::vector<int> TensorSpace::digits(int idx) const {
    std::vector<int> d(f_.size());
    for (int j = (int)f_.size() - 1; j >= 0; --j) {
        int b = f_[j].size();
        d[j] = idx % b;
        idx /= b;
    }
    return d;
}

int TensorSpace::index(const std::vector<int>& d) const {
    int idx = 0;
    for (std::size_t j = 0; j < f_.size(); ++j) idx = idx * (int)f_[j].size() + d[j];
    return idx;
}

int TensorSpace::prefix_parity(const std::vector<int>& d, int j) const {
    int p = 0;
    for (int i = 0; i < j; ++i) p += f_[i][d[i]];
    return p & 1;
}

TensorSpace TensorSpace::without(int j, int count) const {
    auto f = f_;
    f.erase(f.begin() + j, f.begin() + j + count);
    return TensorSpace(f);
}

TensorSpace TensorSpace::inserted(int j, const std::vector<std::vector<int>>& extra) const {
    auto f = f_;
    f.insert(f.begin() + j, extra.begin(), extra.end());
    return TensorSpace(f);
}

SMat TensorSpace::slot(int j, const DMat& a, int pa) const {
    SMat out(dim_, dim_);
    // Column-driven: image of basis vector idx.
    std::vector<SMat::Row> rows(dim_);
    for (int idx = 0; idx < dim_; ++idx) {
        auto d = digits(idx);
        int s = (pa && prefix_parity(d, j)) ? -1 : 1;
        int src = d[j];
        for (int c = 0; c < (int)a.size(); ++c) {
            if (a[c][src] == 0) continue;
            d[j] = c;
            rows[index(d)].push_back({idx, s * a[c][src]});
        }
    }
    for (int i = 0; i < dim_; ++i) out.set_row(i, std::move(rows[i]));
    return out;
}

SMat TensorSpace::permute(int offset, const std::vector<int>& w) const {
    int k = w.size();
    std::vector<std::vector<int>> nf = f_;
    for (int i = 0; i < k; ++i) nf[offset + w[i]] = f_[offset + i];
    TensorSpace target(nf);
    SMat out(target.dim(), dim_);
    std::vector<SMat::Row> rows(target.dim());
    for (int idx = 0; idx < dim_; ++idx) {
        auto d = digits(idx);
        auto nd = d;
        int p = 0;
        for (int i = 0; i < k; ++i) {
            nd[offset + w[i]] = d[offset + i];
            for (int l = i + 1; l < k; ++l)
                if (w[i] > w[l]) p += f_[offset + i][d[offset + i]] * f_[offset + l][d[offset + l]];
        }
        rows[target.index(nd)].push_back({idx, Q(sgn(p))});
    }
    for (int i = 0; i < target.dim(); ++i) out.set_row(i, std::move(rows[i]));
    return out;
}

namespace super {

SMat cap(const TensorSpace& T, const SuperSpace& V, int j) {
    TensorSpace target = T.without(j, 2);
    SMat out(target.dim(), T.dim());
    std::vector<SMat::Row> rows(target.dim());
    for (int idx = 0; idx < T.dim(); ++idx) {
        auto d = T.digits(idx);
        Q w = V.gInv[d[j]][d[j + 1]];
        if (w == 0) continue;
        d.erase(d.begin() + j, d.begin() + j + 2);
        rows[target.index(d)].push_back({idx, w});
    }
    for (int i = 0; i < target.dim(); ++i) out.set_row(i, std::move(rows[i]));
    return out;
}

SMat cup(const TensorSpace& T, const SuperSpace& V, int j) {
    TensorSpace target = T.inserted(j, {V.par, V.par});
    SMat out(target.dim(), T.dim());
    std::vector<SMat::Row> rows(target.dim());
    for (int idx = 0; idx < T.dim(); ++idx) {
        auto d = T.digits(idx);
        for (int a = 0; a < V.dim; ++a)
            for (int b = 0; b < V.dim; ++b) {
                // Dual basis with omega(e^b, x_a) = delta_ab.
                Q w = V.g[b][a];
                if (w == 0) continue;
                auto nd = d;
                nd.insert(nd.begin() + j, {b, a});
                rows[target.index(nd)].push_back({idx, w});
            }
    }
    for (int i = 0; i < target.dim(); ++i) out.set_row(i, std::move(rows[i]));
    return out;
}

StructureMaps structure_maps(const SuperSpace& V) {
    TensorSpace T2 = TensorSpace::power(V, 2);
    TensorSpace T0(std::vector<std::vector<int>>{});
    StructureMaps s;
    s.tau = T2.permute(0, {1, 0});
    s.chat = cap(T2, V, 0);
    s.ccheck = cup(T0, V, 0);
    s.e = s.ccheck * s.chat;
    return s;
}

SMat t_action(const TensorSpace& T, const SuperSpace& V, int i, int j) {
    SMat t(T.dim(), T.dim());
    for (int a = 0; a < V.dim; ++a)
        for (int b = 0; b < V.dim; ++b) {
            int p = parity(V, a, b);
            DMat xab = X(V, a, b), xba = X(V, b, a);
            if (dense::is_zero(xab) || dense::is_zero(xba)) continue;
            SMat term = T.slot(i, xab, p) * T.slot(j, xba, p);
            t += term * Q(sgn(V.par[b]));
        }
    return t * Q(1, 2);
}

DMat casimir(const SuperSpace& V) {
    DMat c = dense::zeros(V.dim, V.dim);
    for (int a = 0; a < V.dim; ++a)
        for (int b = 0; b < V.dim; ++b)
            c = dense::add(c, dense::mul(X(V, a, b), X(V, b, a)), Q(sgn(V.par[b]), 2));
    return c;
}

namespace {
std::string label(const SuperSpace& V) {
    return "(m,2n)=(" + std::to_string(V.m) + "," + std::to_string(2 * V.n) + ")";
}
}  // namespace

Report key_lemma_check(const SuperSpace& V) {
    Report r{"key lemma " + label(V), {}};
    auto s = structure_maps(V);
    TensorSpace T2 = TensorSpace::power(V, 2);
    SMat t = t_action(T2, V, 0, 1);
    SMat diff = t - (s.tau - s.e);
    r.add("(mu(x)mu)(t) = tau - e", diff.is_zero(), diff.is_zero() ? "" : std::to_string(diff.nnz()) + " entries differ");
    Q v;
    bool sc = (s.chat * s.ccheck).is_scalar(&v);
    r.add("chat o ccheck = sdim", sc && v == V.sdim, "value " + v.get_str());
    SMat tt = s.tau * s.tau;
    r.add("tau^2 = id", tt == SMat::identity(V.dim * V.dim));
    r.add("e^2 = sdim e", s.e * s.e == s.e * Q(V.sdim));
    TensorSpace T1 = TensorSpace::power(V, 1);
    SMat zig = T1.slot(0, dense::identity(V.dim), 0);
    TensorSpace T3 = TensorSpace::power(V, 3);
    SMat left = cap(T3, V, 1) * cup(T1, V, 0);
    SMat right = cap(T3, V, 0) * cup(T1, V, 1);
    r.add("(id(x)chat)(ccheck(x)id) = id", left == zig);
    r.add("(chat(x)id)(id(x)ccheck) = id", right == zig);
    return r;
}

Report casimir_eigen_check(const SuperSpace& V) {
    Report r{"casimir eigenvalue " + label(V), {}};
    DMat c = casimir(V);
    DMat expect = dense::identity(V.dim);
    for (auto& row : expect)
        for (auto& x : row) x *= V.sdim - 1;
    r.add("mu(C) = (sdim - 1) id", c == expect, "expected " + std::to_string(V.sdim - 1));
    return r;
}

Report form_invariance_check(const SuperSpace& V, bool perturb) {
    Report r{"form invariance " + label(V), {}};
    int bad = 0;
    for (int a = 0; a < V.dim; ++a)
        for (int b = 0; b < V.dim; ++b) {
            DMat j = J(V, a, b);
            if (perturb) j = dense::add(unit_lower(V, a, b), unit_lower(V, b, a));
            int p = parity(V, a, b);
            for (int c = 0; c < V.dim; ++c)
                for (int d = 0; d < V.dim; ++d) {
                    // omega(J e^c, e^d) + (-1)^{p[c]} omega(e^c, J e^d)
                    Q s = 0;
                    for (int x = 0; x < V.dim; ++x) {
                        s += j[x][c] * V.gInv[x][d];
                        s += sgn(p * V.par[c]) * j[x][d] * V.gInv[c][x];
                    }
                    if (s != 0) ++bad;
                }
        }
    r.add("omega(J e^c, e^d) + (-1)^{([a]+[b])[c]} omega(e^c, J e^d) = 0", bad == 0,
          bad ? std::to_string(bad) + " failing quadruples" : "");
    return r;
}

Report bracket_check(const SuperSpace& V) {
    Report r{"bracket table " + label(V), {}};
    int n = V.dim, bad = 0;
    // [J_ab, J_cd] = g_cb J_ad + (-1)^{[a]([b]+[c])} g_da J_bc - (-1)^{[c][d]} g_db J_ac - (-1)^{[a][b]} g_ca J_bd
    const DMat& G = V.g;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    DMat lhs = supercommutator(J(V, a, b), parity(V, a, b), J(V, c, d), parity(V, c, d));
                    int ab = V.par[a] * V.par[b], cd = V.par[c] * V.par[d];
                    int abc = V.par[a] * (V.par[b] + V.par[c]);
                    DMat rhs = dense::zeros(n, n);
                    rhs = dense::add(rhs, J(V, a, d), G[c][b]);
                    rhs = dense::add(rhs, J(V, b, c), sgn(abc) * G[d][a]);
                    rhs = dense::add(rhs, J(V, a, c), -sgn(cd) * G[d][b]);
                    rhs = dense::add(rhs, J(V, b, d), -sgn(ab) * G[c][a]);
                    if (lhs != rhs) ++bad;
                }
    r.add("[J_ab, J_cd] four-term expansion", bad == 0, bad ? std::to_string(bad) + " failing quadruples" : "");
    LieBasis L = lie_basis(V);
    std::vector<DVec> rows;
    for (auto& m : L.mats) {
        DVec v;
        for (auto& row : m) v.insert(v.end(), row.begin(), row.end());
        rows.push_back(v);
    }
    int rk = dense::rank(rows);
    r.add("dim osp = m(m-1)/2 + n(2n+1) + 2mn", rk == expected_lie_dim(V.m, V.n) && rk == L.size(),
          "rank " + std::to_string(rk));
    return r;
}

}  // namespace super

}  // namespace pbr
