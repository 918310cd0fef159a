#pragma once

#include "polyhole/matrix.hpp"
#include "polyhole/polytope.hpp"

namespace polyhole {

/// Parameters of the main family: h >= 1 holes, dimension d >= 3.
struct PhdSpec {
    Int h = 1;
    Int d = 3;
    void validate() const;
};

/// The d-dimensional polytope conv({u_1..u_10} u {v_i, v_i'}) whose graded
/// semigroup has exactly h holes. The generating list is emitted literally;
/// duplicates collapsing for small parameters (h = 1, d = 3) are deduplicated
/// by the polytope constructor, and all geometry is recomputed downstream.
LatticePolytope build_phd(const PhdSpec& spec);

/// The ten supporting-hyperplane families H_0, H_1, H_{2,i}..H_{9,i} in
/// canonical normal.x <= offset form with primitive normals, deduplicated and
/// sorted. Labels record the family name and the original orientation.
HRep build_expected_hrep(const PhdSpec& spec);

/// Ogata's proposed 4-dimensional example P_2 (ten listed points); it has
/// infinitely many holes, refuting very ampleness.
LatticePolytope build_ogata_p2();

/// The 3-dimensional 8-vertex family Q_k, k >= 1.
LatticePolytope build_qk(Int k);

/// The configuration matrix of the x_1 = 0 facet: columns v_2*, v_2'*, ...,
/// v_{d-1}*, v_{d-1}'*, u_{3,0}*..u_{3,h-1}*, u_{2,0}*..u_{2,h-1}*,
/// u_{1,0}*..u_{1,h}*, where v* = e_1 + v. Duplicate columns are kept:
/// the column order and multiplicity define the toric variables.
IntMatrix build_f0_configuration(const PhdSpec& spec);

/// The expected holes (u_j', 2) in Z^{d+1}: u_j' = e_1 + j(e_2+...+e_{d-1}) +
/// (j+2) e_d for j = 1..h, each at height 2.
std::vector<Vec> expected_holes(const PhdSpec& spec);

}  // namespace polyhole
