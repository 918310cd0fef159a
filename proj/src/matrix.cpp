#include "polyhole/matrix.hpp"

#include <algorithm>
#include <ostream>

namespace polyhole {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw invalid_input("from_rows: ragged input");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw invalid_input("from_columns: ragged input");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec IntMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec IntMatrix::column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Vec> IntMatrix::columns() const {
    std::vector<Vec> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = column(j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw invalid_input("matrix product: dimension mismatch");
    IntMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Int a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(a, other.at(k, j)));
        }
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = checked_neg(at(i, c));
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = checked_neg(at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, Int c) {
    for (std::size_t col = 0; col < cols_; ++col)
        at(i, col) = checked_add(at(i, col), checked_mul(c, at(k, col)));
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, Int c) {
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, j) = checked_add(at(r, j), checked_mul(c, at(r, k)));
}

// Bareiss: division-free pivoting with exact interior divisions.
Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw invalid_input("determinant: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a(*this);
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a.at(i, j), a.at(k, k)),
                                      checked_mul(a.at(i, k), a.at(k, j)));
                a.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return checked_mul(sign, a.at(n - 1, n - 1));
}

std::size_t IntMatrix::rank() const {
    IntMatrix a(*this);
    std::size_t n = rows_, m = cols_;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a.at(p, c) == 0) ++p;
        if (p == n) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < m; ++j)
                a.at(i, j) = checked_sub(checked_mul(a.at(i, j), a.at(r, c)),
                                         checked_mul(a.at(i, c), a.at(r, j))) /
                             prev;
        for (std::size_t i = r + 1; i < n; ++i) a.at(i, c) = 0;
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    Int d = determinant();
    return d == 1 || d == -1;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "[") << m.at(i, j);
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

}  // namespace polyhole
