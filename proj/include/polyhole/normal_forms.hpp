#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyhole/matrix.hpp"

namespace polyhole {

/// Column-style Hermite normal form: M * U = H with U unimodular.
/// H's nonzero columns come first, with strictly increasing pivot rows,
/// positive pivots, entries left of a pivot reduced into [0, pivot),
/// and zeros right of a pivot in its pivot row.
struct HermiteForm {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

/// Smith normal form: U * M * V = S diagonal, with d_1 | d_2 | ... | d_r > 0.
struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    std::vector<Int> elementary_divisors;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of the integer kernel {x : M x = 0} (saturated by construction).
std::vector<Vec> kernel_basis(const IntMatrix& m);

/// Solve B c = target exactly over the integers, B a column-HNF basis.
/// Returns nullopt when target is outside the lattice spanned by B.
std::optional<Vec> solve_in_hnf_lattice(const IntMatrix& hnf_basis, const Vec& target);

}  // namespace polyhole
