#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "polyhole/checked.hpp"

namespace polyhole {

/// Dense integer matrix with overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<Vec>& rows);
    static IntMatrix from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[i * cols_ + j];
    }
    Int at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[i * cols_ + j];
    }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    std::vector<Vec> columns() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row[i] += c * row[k], col[j] += c * col[k]
    void add_row_multiple(std::size_t i, std::size_t k, Int c);
    void add_col_multiple(std::size_t j, std::size_t k, Int c);

    /// Exact determinant (Bareiss fraction-free elimination); square only.
    Int determinant() const;
    std::size_t rank() const;
    bool is_unimodular() const;

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw invalid_input("IntMatrix: index out of bounds");
    }

    std::size_t rows_ = 0, cols_ = 0;
    Vec data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace polyhole
