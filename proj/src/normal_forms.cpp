#include "polyhole/normal_forms.hpp"

#include <algorithm>

namespace polyhole {

HermiteForm hermite_normal_form(const IntMatrix& m) {
    HermiteForm f;
    f.H = m;
    f.U = IntMatrix::identity(m.cols());
    std::size_t col = 0;
    for (std::size_t row = 0; row < m.rows() && col < m.cols(); ++row) {
        // pivot: leftmost nonzero entry in this row at columns >= col
        std::size_t p = col;
        while (p < m.cols() && f.H.at(row, p) == 0) ++p;
        if (p == m.cols()) continue;
        if (p != col) {
            f.H.swap_cols(col, p);
            f.U.swap_cols(col, p);
        }
        // clear the rest of the row with unimodular column combinations
        for (std::size_t j = col + 1; j < m.cols(); ++j) {
            while (f.H.at(row, j) != 0) {
                Int a = f.H.at(row, col), b = f.H.at(row, j);
                Int q = floor_div(b, a);
                f.H.add_col_multiple(j, col, checked_neg(q));
                f.U.add_col_multiple(j, col, checked_neg(q));
                if (f.H.at(row, j) != 0) {  // remainder smaller than |a|: swap and continue
                    f.H.swap_cols(col, j);
                    f.U.swap_cols(col, j);
                }
            }
        }
        if (f.H.at(row, col) < 0) {
            f.H.negate_col(col);
            f.U.negate_col(col);
        }
        // reduce entries left of the pivot into [0, pivot)
        Int piv = f.H.at(row, col);
        for (std::size_t j = 0; j < col; ++j) {
            Int q = floor_div(f.H.at(row, j), piv);
            if (q != 0) {
                f.H.add_col_multiple(j, col, checked_neg(q));
                f.U.add_col_multiple(j, col, checked_neg(q));
            }
        }
        f.pivot_rows.push_back(row);
        ++col;
    }
    f.rank = col;
    return f;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f;
    f.S = m;
    f.U = IntMatrix::identity(m.rows());
    f.V = IntMatrix::identity(m.cols());
    std::size_t n = std::min(m.rows(), m.cols());

    auto submatrix_nonzero = [&](std::size_t t, std::size_t& bi, std::size_t& bj) {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                Int v = f.S.at(i, j);
                if (v == 0) continue;
                Int av = v < 0 ? checked_neg(v) : v;
                if (!found || av < best) {
                    found = true;
                    best = av;
                    bi = i;
                    bj = j;
                }
            }
        return found;
    };

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t bi = t, bj = t;
        if (!submatrix_nonzero(t, bi, bj)) break;
        f.S.swap_rows(t, bi);
        f.U.swap_rows(t, bi);
        f.S.swap_cols(t, bj);
        f.V.swap_cols(t, bj);

        for (;;) {
            // clear column t below the pivot
            bool dirty = false;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                while (f.S.at(i, t) != 0) {
                    Int q = floor_div(f.S.at(i, t), f.S.at(t, t));
                    f.S.add_row_multiple(i, t, checked_neg(q));
                    f.U.add_row_multiple(i, t, checked_neg(q));
                    if (f.S.at(i, t) != 0) {
                        f.S.swap_rows(t, i);
                        f.U.swap_rows(t, i);
                        dirty = true;
                    }
                }
            }
            // clear row t right of the pivot
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                while (f.S.at(t, j) != 0) {
                    Int q = floor_div(f.S.at(t, j), f.S.at(t, t));
                    f.S.add_col_multiple(j, t, checked_neg(q));
                    f.V.add_col_multiple(j, t, checked_neg(q));
                    if (f.S.at(t, j) != 0) {
                        f.S.swap_cols(t, j);
                        f.V.swap_cols(t, j);
                        dirty = true;
                    }
                }
            }
            bool col_clear = true;
            for (std::size_t i = t + 1; i < m.rows(); ++i)
                if (f.S.at(i, t) != 0) col_clear = false;
            if (col_clear && !dirty) break;
        }

        // divisibility fix: pull a non-divisible entry into row t and redo
        for (;;) {
            Int piv = f.S.at(t, t);
            bool fixed = true;
            for (std::size_t i = t + 1; i < m.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols() && fixed; ++j)
                    if (f.S.at(i, j) % piv != 0) {
                        f.S.add_row_multiple(t, i, 1);
                        f.U.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
            // re-run the elimination at position t
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m.rows(); ++i) {
                    while (f.S.at(i, t) != 0) {
                        Int q = floor_div(f.S.at(i, t), f.S.at(t, t));
                        f.S.add_row_multiple(i, t, checked_neg(q));
                        f.U.add_row_multiple(i, t, checked_neg(q));
                        if (f.S.at(i, t) != 0) {
                            f.S.swap_rows(t, i);
                            f.U.swap_rows(t, i);
                            dirty = true;
                        }
                    }
                }
                for (std::size_t j = t + 1; j < m.cols(); ++j) {
                    while (f.S.at(t, j) != 0) {
                        Int q = floor_div(f.S.at(t, j), f.S.at(t, t));
                        f.S.add_col_multiple(j, t, checked_neg(q));
                        f.V.add_col_multiple(j, t, checked_neg(q));
                        if (f.S.at(t, j) != 0) {
                            f.S.swap_cols(t, j);
                            f.V.swap_cols(t, j);
                            dirty = true;
                        }
                    }
                }
                bool col_clear = true;
                for (std::size_t i = t + 1; i < m.rows(); ++i)
                    if (f.S.at(i, t) != 0) col_clear = false;
                if (col_clear && !dirty) break;
            }
        }

        if (f.S.at(t, t) < 0) {
            f.S.negate_row(t);
            f.U.negate_row(t);
        }
    }

    for (std::size_t t = 0; t < n; ++t)
        if (f.S.at(t, t) != 0) f.elementary_divisors.push_back(f.S.at(t, t));
    return f;
}

std::vector<Vec> kernel_basis(const IntMatrix& m) {
    if (m.rows() == 0) {
        // no constraints: kernel is everything
        std::vector<Vec> basis;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Vec e(m.cols(), 0);
            e[j] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    HermiteForm f = hermite_normal_form(m);
    std::vector<Vec> basis;
    for (std::size_t j = f.rank; j < m.cols(); ++j) basis.push_back(f.U.column(j));
    return basis;
}

std::optional<Vec> solve_in_hnf_lattice(const IntMatrix& b, const Vec& target) {
    if (target.size() != b.rows()) throw invalid_input("solve_in_hnf_lattice: dimension mismatch");
    // pivot rows: first nonzero row of each column (columns are echelon)
    Vec residual = target;
    Vec coeff(b.cols(), 0);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::size_t p = 0;
        while (p < b.rows() && b.at(p, j) == 0) ++p;
        if (p == b.rows()) throw invalid_input("solve_in_hnf_lattice: zero basis column");
        if (residual[p] % b.at(p, j) != 0) return std::nullopt;
        Int c = residual[p] / b.at(p, j);
        coeff[j] = c;
        if (c != 0)
            for (std::size_t i = 0; i < b.rows(); ++i)
                residual[i] = checked_sub(residual[i], checked_mul(c, b.at(i, j)));
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeff;
}

}  // namespace polyhole
