#pragma once

#include <cstddef>
#include <vector>

#include "polyhole/polytope.hpp"

namespace polyhole {

/// Pointed rational cone {y : normal . y >= 0 for every facet normal}, with
/// primitive extreme rays. Built from generators; facets come from double
/// description in the span, so lower-dimensional cones are fine.
struct Cone {
    std::size_t ambient_dim = 0;
    std::vector<Vec> rays;           // primitive extreme rays, sorted
    std::vector<Vec> facet_normals;  // a . y >= 0 form, primitive, sorted

    static Cone from_generators(std::size_t ambient_dim, const std::vector<Vec>& gens);

    bool contains(const Vec& y) const;
    /// sum of facet normals: integral, strictly positive on the cone minus 0
    Vec positive_grading() const;
};

using HilbertBasis = std::vector<Vec>;

/// Unique minimal generating set of cone ∩ Z^d. Candidates are generated from
/// half-open parallelepipeds over a pulling triangulation of the cone plus the
/// primitive rays; irreducibility is decided exactly by enumerating the
/// order polytope {z in C : x - z in C}.
HilbertBasis hilbert_basis(const Cone& c);

/// Tangent cone of P at a vertex v: cone(P ∩ Z^d - v). Facet normals are the
/// negated P-facets tight at v.
Cone tangent_cone(const LatticePolytope& p, const Vec& vertex);

}  // namespace polyhole
