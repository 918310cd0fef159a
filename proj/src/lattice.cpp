#include "polyhole/lattice.hpp"

#include <algorithm>
#include <set>

namespace polyhole {

namespace {

// Saturated lattice basis for span(columns of D) ∩ Z^N, as column-HNF.
// The saturation is the integer kernel of the rational row space of D,
// computed as kernel(kernel(D^T)) -- integer kernels are saturated.
IntMatrix saturation_basis(std::size_t ambient_dim, const std::vector<Vec>& diffs) {
    std::vector<Vec> nonzero;
    for (const Vec& v : diffs)
        if (!is_zero(v)) nonzero.push_back(v);
    if (nonzero.empty()) return IntMatrix(ambient_dim, 0);
    std::vector<Vec> ortho = kernel_basis(IntMatrix::from_rows(nonzero));
    IntMatrix constraints = ortho.empty() ? IntMatrix(0, ambient_dim) : IntMatrix::from_rows(ortho);
    std::vector<Vec> basis = kernel_basis(constraints);
    if (basis.empty()) return IntMatrix(ambient_dim, 0);
    return hermite_normal_form(IntMatrix::from_columns(basis)).H;
}

Vec solve_coords(const IntMatrix& basis, const Vec& v) {
    auto c = solve_in_hnf_lattice(basis, v);
    if (!c) throw invalid_input("lattice coordinates: point outside saturated lattice");
    return *c;
}

}  // namespace

SublatticeCoords sublattice_coordinates(const std::vector<Vec>& points) {
    if (points.empty()) throw invalid_input("sublattice_coordinates: empty point set");
    SublatticeCoords out;
    out.origin = *std::min_element(points.begin(), points.end());
    std::vector<Vec> diffs;
    diffs.reserve(points.size());
    for (const Vec& p : points) diffs.push_back(vec_sub(p, out.origin));
    out.basis = saturation_basis(out.origin.size(), diffs);
    out.dim = out.basis.cols();
    out.coords.reserve(points.size());
    for (const Vec& d : diffs) out.coords.push_back(solve_coords(out.basis, d));
    return out;
}

SpanLattice span_lattice_coordinates(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    SpanLattice out;
    out.basis = saturation_basis(ambient_dim, vectors);
    out.dim = out.basis.cols();
    out.coords.reserve(vectors.size());
    for (const Vec& v : vectors) out.coords.push_back(solve_coords(out.basis, v));
    return out;
}

bool is_unimodular_simplex(const std::vector<Vec>& points) {
    if (points.empty()) return false;
    std::set<Vec> dedup(points.begin(), points.end());
    if (dedup.size() != points.size()) return false;
    std::size_t k = points.size() - 1;
    if (k == 0) return true;
    SublatticeCoords sc = sublattice_coordinates(points);
    if (sc.dim != k) return false;  // affinely dependent
    // edges from the first point, in saturated lattice coordinates
    std::vector<Vec> edges;
    const Vec& base = sc.coords[0];
    for (std::size_t i = 1; i < points.size(); ++i) edges.push_back(vec_sub(sc.coords[i], base));
    Int det = IntMatrix::from_columns(edges).determinant();
    return det == 1 || det == -1;
}

bool is_totally_unimodular(const IntMatrix& m, unsigned long long work_budget) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) < -1 || m.at(i, j) > 1) return false;

    std::size_t n = std::min(m.rows(), m.cols());
    // estimate work before committing
    long double work = 0;
    for (std::size_t k = 2; k <= n; ++k) {
        long double rows_choose = 1, cols_choose = 1;
        for (std::size_t t = 0; t < k; ++t) {
            rows_choose = rows_choose * (m.rows() - t) / (t + 1);
            cols_choose = cols_choose * (m.cols() - t) / (t + 1);
        }
        work += rows_choose * cols_choose * k * k * k;
    }
    if (work > static_cast<long double>(work_budget))
        throw budget_exceeded("is_totally_unimodular: submatrix budget exceeded");

    std::vector<std::size_t> ri, ci;
    for (std::size_t k = 2; k <= n; ++k) {
        ri.assign(k, 0);
        for (std::size_t t = 0; t < k; ++t) ri[t] = t;
        for (;;) {
            ci.assign(k, 0);
            for (std::size_t t = 0; t < k; ++t) ci[t] = t;
            for (;;) {
                IntMatrix sub(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[a], ci[b]);
                Int d = sub.determinant();
                if (d < -1 || d > 1) return false;
                // next column subset
                std::size_t t = k;
                while (t > 0 && ci[t - 1] == m.cols() - k + t - 1) --t;
                if (t == 0) break;
                ++ci[t - 1];
                for (std::size_t s = t; s < k; ++s) ci[s] = ci[s - 1] + 1;
            }
            std::size_t t = k;
            while (t > 0 && ri[t - 1] == m.rows() - k + t - 1) --t;
            if (t == 0) break;
            ++ri[t - 1];
            for (std::size_t s = t; s < k; ++s) ri[s] = ri[s - 1] + 1;
        }
    }
    return true;
}

}  // namespace polyhole
