#include "pbr/linalg.hpp"

#include <algorithm>
#include <functional>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace pbr {

namespace dense {

DMat zeros(int r, int c) { return DMat(r, DVec(c, Q(0))); }

DMat identity(int n) {
    DMat a = zeros(n, n);
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

DMat mul(const DMat& a, const DMat& b) {
    int n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    DMat c = zeros(n, m);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j)
                if (b[l][j] != 0) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

DMat add(const DMat& a, const DMat& b, const Q& cb) {
    DMat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += cb * b[i][j];
    return c;
}

DMat inverse(const DMat& a) {
    int n = a.size();
    DMat m = a, inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw Error("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Q piv = m[c][c];
        for (int j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (int j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

bool is_zero(const DMat& a) {
    for (auto& row : a)
        for (auto& x : row)
            if (x != 0) return false;
    return true;
}

bool coordinates(const std::vector<DVec>& basis, const DVec& target, DVec& coords) {
    int k = basis.size(), n = target.size();
    // Augmented system: columns are basis vectors.
    DMat m = zeros(n, k + 1);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) m[i][j] = basis[j][i];
    for (int i = 0; i < n; ++i) m[i][k] = target[i];
    std::vector<int> pivcol;
    int row = 0;
    for (int c = 0; c < k && row < n; ++c) {
        int p = row;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        Q piv = m[row][c];
        for (int j = c; j <= k; ++j) m[row][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (int j = c; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivcol.push_back(c);
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (m[i][k] != 0) return false;
    coords.assign(k, Q(0));
    for (int i = 0; i < row; ++i) coords[pivcol[i]] = m[i][k];
    return true;
}

int rank(std::vector<DVec> m) {
    int n = m.size();
    if (!n) return 0;
    int cols = m[0].size(), row = 0;
    for (int c = 0; c < cols && row < n; ++c) {
        int p = row;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        for (int i = row + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[row][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    return row;
}

std::vector<Q> charpoly(const DMat& a) {
    int n = a.size();
    // Berkowitz: vector of det(xI - A) coefficients, highest degree first.
    std::vector<Q> v{Q(1)};
    for (int k = 0; k < n; ++k) {
        // Leading principal (k+1)x(k+1) block: A_k = [[A_{k-1}, c],[r, a_kk]].
        std::vector<Q> col(k), rowv(k);
        for (int i = 0; i < k; ++i) {
            col[i] = a[i][k];
            rowv[i] = a[k][i];
        }
        // Toeplitz column: 1, -a_kk, -r c, -r A c, -r A^2 c, ...
        std::vector<Q> t(k + 2);
        t[0] = 1;
        t[1] = -a[k][k];
        std::vector<Q> w = col;
        for (int j = 2; j <= k + 1; ++j) {
            Q s = 0;
            for (int i = 0; i < k; ++i) s += rowv[i] * w[i];
            t[j] = -s;
            std::vector<Q> nw(k, Q(0));
            for (int i = 0; i < k; ++i)
                for (int l = 0; l < k; ++l) nw[i] += a[i][l] * w[l];
            w = nw;
        }
        std::vector<Q> nv(k + 2, Q(0));
        for (int i = 0; i < k + 2; ++i)
            for (int j = 0; j <= i && j < (int)v.size(); ++j) nv[i] += t[i - j] * v[j];
        v = nv;
    }
    std::reverse(v.begin(), v.end());
    return v;
}

namespace {

std::vector<Q> divide_root(const std::vector<Q>& p, const Q& r) {
    int n = p.size() - 1;
    std::vector<Q> q(n);
    Q carry = 0;
    for (int i = n; i >= 1; --i) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

Q eval(const std::vector<Q>& p, const Q& x) {
    Q s = 0;
    for (int i = p.size() - 1; i >= 0; --i) s = s * x + p[i];
    return s;
}

void trim(std::vector<Q>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero), coefficients from x^0 upward.
std::pair<std::vector<Q>, std::vector<Q>> divmod(std::vector<Q> a, std::vector<Q> b) {
    trim(a);
    trim(b);
    if (a.size() < b.size()) return {{Q(0)}, a};
    std::vector<Q> q(a.size() - b.size() + 1, Q(0));
    for (int i = a.size() - b.size(); i >= 0; --i) {
        Q c = a[i + b.size() - 1] / b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    a.resize(b.size() > 1 ? b.size() - 1 : 1);
    trim(a);
    return {q, a};
}

bool is_zero_poly(const std::vector<Q>& p) {
    for (auto& c : p)
        if (c != 0) return false;
    return true;
}

std::vector<Q> poly_gcd(std::vector<Q> a, std::vector<Q> b) {
    trim(a);
    trim(b);
    while (!is_zero_poly(b)) {
        auto r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a;
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n) d.push_back(n / i);
        }
    return d;
}

}  // namespace

std::vector<std::pair<Q, int>> rational_roots(std::vector<Q> p, std::vector<Q>* rest) {
    std::vector<std::pair<Q, int>> out;
    trim(p);
    // Search candidates on the squarefree part, whose constant term stays small.
    std::vector<Q> sq = p;
    if (p.size() > 2) {
        std::vector<Q> dp(p.size() - 1);
        for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * Q(i);
        auto g = poly_gcd(p, dp);
        sq = divmod(p, g).first;
    }
    while (sq.size() > 1 && sq[0] == 0) sq.erase(sq.begin());
    std::vector<Q> cands;
    if (p.size() > 1 && p[0] == 0) cands.push_back(Q(0));
    if (sq.size() > 1) {
        mpz_class l = 1;
        for (auto& c : sq) l = lcm(l, mpz_class(c.get_den()));
        std::vector<mpz_class> z;
        for (auto& c : sq) z.push_back(mpz_class(c * l));
        for (auto& a : divisors(z.front()))
            for (auto& b : divisors(z.back()))
                for (int sg : {1, -1}) {
                    Q x(sg * a, b);
                    x.canonicalize();
                    if (eval(sq, x) == 0 && std::find(cands.begin(), cands.end(), x) == cands.end()) cands.push_back(x);
                }
    }
    for (auto& x : cands) {
        int mult = 0;
        while (p.size() > 1 && eval(p, x) == 0) {
            p = divide_root(p, x);
            ++mult;
        }
        out.push_back({x, mult});
    }
    if (rest) *rest = p;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dense

SMat SMat::identity(int n) {
    SMat m(n, n);
    for (int i = 0; i < n; ++i) m.r_[i].push_back({i, Q(1)});
    return m;
}

SMat SMat::from_dense(const DMat& d) {
    int rows = d.size(), cols = rows ? d[0].size() : 0;
    SMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (d[i][j] != 0) m.r_[i].push_back({j, d[i][j]});
    return m;
}

Q SMat::at(int i, int j) const {
    auto& row = r_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](auto& e, int c) { return e.first < c; });
    return it != row.end() && it->first == j ? it->second : Q(0);
}

std::size_t SMat::nnz() const {
    std::size_t n = 0;
    for (auto& row : r_) n += row.size();
    return n;
}

bool SMat::is_scalar(Q* value) const {
    if (rows_ != cols_) return false;
    Q v = rows_ ? at(0, 0) : Q(0);
    for (int i = 0; i < rows_; ++i) {
        if (at(i, i) != v) return false;
        if (r_[i].size() > (v == 0 ? 0u : 1u)) return false;
    }
    if (value) *value = v;
    return true;
}

DMat SMat::to_dense() const {
    DMat d = dense::zeros(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, x] : r_[i]) d[i][j] = x;
    return d;
}

void SMat::set_row(int i, Row row) {
    std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
    Row out;
    for (auto& [j, x] : row) {
        if (!out.empty() && out.back().first == j) out.back().second += x;
        else out.push_back({j, x});
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](auto& e) { return e.second == 0; }), out.end());
    r_[i] = std::move(out);
}

SMat SMat::operator-() const {
    SMat m = *this;
    for (auto& row : m.r_)
        for (auto& e : row) e.second = -e.second;
    return m;
}

namespace {

SMat::Row merge(const SMat::Row& a, const SMat::Row& b, int sign) {
    SMat::Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back({b[j].first, sign > 0 ? b[j].second : Q(-b[j].second)});
            ++j;
        } else {
            Q s = sign > 0 ? Q(a[i].second + b[j].second) : Q(a[i].second - b[j].second);
            if (s != 0) out.push_back({a[i].first, s});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SMat& SMat::operator+=(const SMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in sum");
    for (int i = 0; i < rows_; ++i) r_[i] = merge(r_[i], o.r_[i], 1);
    return *this;
}

SMat& SMat::operator-=(const SMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in difference");
    for (int i = 0; i < rows_; ++i) r_[i] = merge(r_[i], o.r_[i], -1);
    return *this;
}

SMat& SMat::operator*=(const Q& c) {
    if (c == 0) {
        for (auto& row : r_) row.clear();
        return *this;
    }
    for (auto& row : r_)
        for (auto& e : row) e.second *= c;
    return *this;
}

SMat operator*(const SMat& a, const SMat& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
    SMat c(a.rows_, b.cols_);
    std::vector<Q> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<int> touched;
    for (int i = 0; i < a.rows_; ++i) {
        touched.clear();
        for (auto& [k, x] : a.r_[i])
            for (auto& [j, y] : b.r_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    acc[j] = 0;
                    touched.push_back(j);
                }
                acc[j] += x * y;
            }
        std::sort(touched.begin(), touched.end());
        auto& row = c.r_[i];
        for (int j : touched) {
            if (acc[j] != 0) row.push_back({j, acc[j]});
            used[j] = 0;
        }
    }
    return c;
}

bool SMat::operator==(const SMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
}

DVec SMat::apply(const DVec& v) const {
    if ((int)v.size() != cols_) throw Error("vector length mismatch");
    DVec out(rows_, Q(0));
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, x] : r_[i]) out[i] += x * v[j];
    return out;
}

std::string SMat::hash() const {
    // FNV-1a 64 over "rows x cols;i:j=v;..."
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    feed(std::to_string(rows_) + "x" + std::to_string(cols_));
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, x] : r_[i]) feed(";" + std::to_string(i) + ":" + std::to_string(j) + "=" + x.get_str());
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

SMat kron(const SMat& a, const SMat& b) {
    SMat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < b.rows(); ++k) {
            SMat::Row row;
            for (auto& [j, x] : a.row(i))
                for (auto& [l, y] : b.row(k)) row.push_back({j * b.cols() + l, x * y});
            c.set_row(i * b.rows() + k, std::move(row));
        }
    return c;
}

}  // namespace pbr
