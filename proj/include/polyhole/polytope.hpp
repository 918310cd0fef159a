#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polyhole/lattice.hpp"

namespace polyhole {

/// Closed halfspace normal . x <= offset with primitive (content-1) normal.
/// `label` is an audit note (e.g. the paper-side name and original
/// orientation); it takes no part in comparisons.
struct Halfspace {
    Vec normal;
    Int offset = 0;
    std::string label;

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

/// Intersection of halfspaces; the result of facet enumeration is irredundant
/// and canonically ordered.
struct HRep {
    std::size_t ambient_dim = 0;
    std::vector<Halfspace> halfspaces;

    /// x in the n-th dilation: normal . x <= n * offset for every halfspace.
    bool contains(const Vec& x, Int dilation) const;
};

/// Integer linear constraint coeffs . x <= bound (internal enumeration form).
struct LinearConstraint {
    Vec coeffs;
    Int bound = 0;
};

/// All integer points satisfying the constraints inside the closed box, by
/// depth-first coordinate fixing with per-coordinate interval narrowing.
/// Output is sorted lexicographically.
std::vector<Vec> enumerate_integer_points(const std::vector<LinearConstraint>& constraints,
                                          const std::vector<std::array<Int, 2>>& box);

/// Integral convex polytope given by a generating point set (not necessarily
/// vertices). Points are deduplicated and sorted at construction; facet and
/// vertex data are computed once on demand and shared between copies.
class LatticePolytope {
public:
    LatticePolytope(std::size_t ambient_dim, std::vector<Vec> points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<Vec>& points() const { return points_; }
    std::size_t dim() const;

    /// Irredundant facet system; requires dim() == ambient_dim() >= 1.
    const HRep& hrep() const;
    const std::vector<Vec>& vertices() const;

    std::vector<Vec> lattice_points(Int dilation) const;
    std::vector<Vec> slice(Int dilation, Int value, std::size_t axis) const;

    /// The facet's lattice points in sublattice coordinates: a full-dimensional
    /// polytope of dimension dim()-1 equivalent to the facet for normality.
    LatticePolytope restrict_to_facet(const Halfspace& f) const;

    /// conv({(p,1) : p in P} u {0}) in one more dimension.
    LatticePolytope pyramid() const;

    /// Lower-dimensional polytopes are handled through this chart: the
    /// restriction of P to the saturated lattice of its affine span.
    const SublatticeCoords& chart() const;
    LatticePolytope restricted() const;

private:
    struct Cache;
    std::size_t ambient_dim_ = 0;
    std::vector<Vec> points_;
    std::shared_ptr<Cache> cache_;
};

/// Facets of a full-dimensional polytope via double description in the
/// homogenization, normals primitive, canonical (lexicographic) order.
HRep facet_enumeration(const LatticePolytope& p);

}  // namespace polyhole
