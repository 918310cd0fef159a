#pragma once

#include <cstddef>
#include <vector>

#include "polyhole/normal_forms.hpp"

namespace polyhole {

/// Affine-lattice coordinates for a point set: `origin + basis * coords[i]`
/// reproduces each input point exactly, and the basis columns span the full
/// lattice (affine span of the points) ∩ Z^N, so the coordinate map is a
/// lattice isomorphism onto Z^k.
struct SublatticeCoords {
    Vec origin;
    IntMatrix basis;  // N x k, column-HNF
    std::vector<Vec> coords;
    std::size_t dim = 0;  // k, the affine dimension
};

SublatticeCoords sublattice_coordinates(const std::vector<Vec>& points);

/// Linear variant (origin fixed at 0) used for cones: basis of span ∩ Z^N.
struct SpanLattice {
    IntMatrix basis;  // N x k, column-HNF
    std::vector<Vec> coords;
    std::size_t dim = 0;
};

SpanLattice span_lattice_coordinates(std::size_t ambient_dim, const std::vector<Vec>& vectors);

/// True iff the points are k+1 affinely independent lattice points spanning a
/// simplex of normalized volume 1 in the lattice induced on their affine span.
bool is_unimodular_simplex(const std::vector<Vec>& points);

/// Exhaustive total-unimodularity test: every square submatrix has determinant
/// in {-1,0,1}. Entries outside {-1,0,1} return false immediately. Throws
/// budget_exceeded when the submatrix count times k^3 exceeds `work_budget`.
bool is_totally_unimodular(const IntMatrix& m, unsigned long long work_budget = 200000000ull);

}  // namespace polyhole
