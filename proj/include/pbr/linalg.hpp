#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbr/scalars.hpp"

namespace pbr {

using DVec = std::vector<Q>;
using DMat = std::vector<std::vector<Q>>;

namespace dense {
DMat zeros(int r, int c);
DMat identity(int n);
DMat mul(const DMat& a, const DMat& b);
DMat add(const DMat& a, const DMat& b, const Q& cb = 1);
DMat inverse(const DMat& a);
bool is_zero(const DMat& a);
// Coordinates of target in the span of basis (each flattened); false if outside.
bool coordinates(const std::vector<DVec>& basis, const DVec& target, DVec& coords);
int rank(std::vector<DVec> rows);
// Characteristic polynomial det(x - A), coefficients from x^0 upward (Berkowitz).
std::vector<Q> charpoly(const DMat& a);
// Distinct rational roots with multiplicity; rest is the unfactored quotient.
std::vector<std::pair<Q, int>> rational_roots(std::vector<Q> poly, std::vector<Q>* rest = nullptr);
}  // namespace dense

// Row-compressed exact matrix; entries kept sorted by column, zeros never stored.
class SMat {
public:
    using Row = std::vector<std::pair<int, Q>>;

    SMat() = default;
    SMat(int rows, int cols) : rows_(rows), cols_(cols), r_(rows) {}
    static SMat identity(int n);
    static SMat from_dense(const DMat& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Row& row(int i) const { return r_[i]; }
    Q at(int i, int j) const;
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }
    bool is_scalar(Q* value = nullptr) const;
    DMat to_dense() const;

    // Row i is replaced; entries need not be sorted or unique.
    void set_row(int i, Row row);

    SMat operator-() const;
    SMat& operator+=(const SMat& o);
    SMat& operator-=(const SMat& o);
    SMat& operator*=(const Q& c);
    friend SMat operator+(SMat a, const SMat& b) { return a += b; }
    friend SMat operator-(SMat a, const SMat& b) { return a -= b; }
    friend SMat operator*(SMat a, const Q& c) { return a *= c; }
    friend SMat operator*(const Q& c, SMat a) { return a *= c; }
    friend SMat operator*(const SMat& a, const SMat& b);
    bool operator==(const SMat& o) const;
    bool operator!=(const SMat& o) const { return !(*this == o); }

    DVec apply(const DVec& v) const;
    std::string hash() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Row> r_;
};

SMat kron(const SMat& a, const SMat& b);

}  // namespace pbr
