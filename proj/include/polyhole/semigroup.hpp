#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyhole/polytope.hpp"

namespace polyhole {

/// Three-valued answer: booleans are only emitted with certificates, budget
/// stops surface as `unknown`.
enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

enum class StopReason { propagation_empty, degree_budget, infinite_suspected };

const char* to_string(StopReason r);

/// Ledger of holes per degree, with the certification status of the scan.
struct HoleReport {
    std::map<Int, std::vector<Vec>> holes_by_degree;  // ambient Z^{N+1} points
    bool certified_complete = false;
    StopReason stop_reason = StopReason::degree_budget;
    Int degree_budget = 0;
    std::vector<Vec> probe_evidence;  // last nonempty level on uncertified stops

    std::size_t total_holes() const;
};

struct KNormalReport {
    Int k = 1;
    Int horizon = 1;
    bool holds_up_to_horizon = false;
    bool certified_all_degrees = false;  // empty level >= dim-1 reached
    std::map<Int, std::vector<Vec>> failures;
};

/// The graded semigroup generated by the height-1 lattice points of a
/// polytope. All public coordinates are ambient (Z^{N+1}, last coordinate =
/// height); internally everything runs in the saturated affine-lattice chart
/// of the polytope, so lower-dimensional inputs and proper lattices
/// (Z A_P != Z^{d+1}) are handled uniformly.
class GradedSemigroup {
public:
    static GradedSemigroup homogenize(const LatticePolytope& p);

    std::size_t ambient_dim() const { return ambient_dim_; }  // N+1
    std::size_t polytope_dim() const { return poly_.ambient_dim(); }
    const std::vector<Vec>& generators() const { return generators_; }

    /// Is ZA equal to the full lattice of the homogenized chart?
    bool lattice_is_full() const { return lattice_index_one_; }

    /// x = (point, height): is x a sum of exactly `height` generators?
    bool is_member(const Vec& x) const;
    std::optional<std::vector<Vec>> decompose(const Vec& x) const;

    /// (cone ∩ ZA) \ semigroup at one height, sorted; empty at height 1.
    std::vector<Vec> holes_at_degree(Int n) const;

    /// Brute-force levels 2..dim-1, propagation (holes + generators) above;
    /// certified when a level at height >= dim-1 comes up empty.
    HoleReport enumerate_holes(Int degree_budget) const;

    KNormalReport is_k_normal(Int k, Int horizon) const;

    /// yes/no with certificates; unknown when the budget binds first.
    Verdict is_normal(Int degree_budget = 0) const;

    /// membership in the cone R>=0 A at the stated height, plus ZA membership
    bool cone_member(const Vec& x) const;
    bool group_member(const Vec& x) const;

    Int default_budget() const;

private:
    GradedSemigroup() = default;

    // chart mapping: ambient (point, height) -> internal coords; nullopt when
    // the point is off the affine lattice of the polytope
    std::optional<Vec> to_internal(const Vec& x) const;
    Vec to_ambient(const Vec& internal, Int height) const;

    bool member_internal(const Vec& coords, Int height) const;

    std::size_t ambient_dim_ = 0;
    LatticePolytope poly_{1, {Vec{0}}};  // replaced in homogenize
    SublatticeCoords chart_;
    std::vector<Vec> generators_;        // ambient (alpha, 1), canonical order
    std::vector<Vec> internal_gens_;     // chart coords, fail-fast order
    IntMatrix group_basis_;              // HNF basis of Z{g_i - g_0} in the chart
    Vec group_origin_;                   // g_0 (chart coords)
    bool lattice_index_one_ = true;

    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<Vec, bool, VecHash> memo_;
};

/// Checks the slice sum decompositions: slice(P, n, k, axis=0) must equal the
/// Minkowski sum of (n-k) copies of P(1,0) and k copies of P(1,1); the (2,1)
/// case additionally carries `degree2_extras` (the expected holes' points),
/// which must be exactly the difference.
struct SliceCase {
    Int n = 2;
    Int k = 1;
};

std::map<std::pair<Int, Int>, bool> verify_slice_decompositions(
    const LatticePolytope& p, const std::vector<SliceCase>& cases,
    const std::vector<Vec>& degree2_extras);

}  // namespace polyhole
