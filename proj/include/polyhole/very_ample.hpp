#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyhole/cone.hpp"
#include "polyhole/semigroup.hpp"

namespace polyhole {

/// Per-vertex record: the tangent-cone Hilbert basis and, for each basis
/// element, a decomposition witness over {p - v : p in P ∩ Z^d} (or the
/// counterexample flag when none exists).
struct VertexCertificate {
    Vec vertex;
    HilbertBasis basis;
    std::vector<std::optional<std::vector<Vec>>> witnesses;  // aligned with basis
    Verdict status = Verdict::unknown;  // yes: all witnessed, no: counterexample
    std::optional<Vec> counterexample;
};

struct VeryAmplenessCertificate {
    Verdict verdict = Verdict::unknown;
    std::vector<VertexCertificate> entries;
    std::string digest() const;
};

struct WitnessSearchBudget {
    std::size_t max_nodes = 2000000;
};

/// P is very ample iff every vertex monoid Z>=0 {p - v} is saturated in its
/// tangent cone; equivalently every tangent-cone Hilbert basis element has a
/// decomposition witness. Non-graded membership is searched depth-first,
/// graded by the sum of the cone's facet normals (strictly positive on the
/// cone), memoized on residuals, with a node budget surfacing as `unknown`.
VeryAmplenessCertificate certify_very_ample(const LatticePolytope& p,
                                            const WitnessSearchBudget& budget = {});

}  // namespace polyhole
