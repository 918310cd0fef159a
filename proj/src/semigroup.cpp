#include "polyhole/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polyhole {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::propagation_empty: return "propagation_empty";
        case StopReason::degree_budget: return "degree_budget";
        default: return "infinite_suspected";
    }
}

std::size_t HoleReport::total_holes() const {
    std::size_t n = 0;
    for (const auto& [deg, hs] : holes_by_degree) n += hs.size();
    return n;
}

GradedSemigroup GradedSemigroup::homogenize(const LatticePolytope& p) {
    GradedSemigroup s;
    s.ambient_dim_ = p.ambient_dim() + 1;

    std::vector<Vec> pts = p.lattice_points(1);
    if (pts.empty()) throw invalid_input("homogenize: polytope has no lattice points");
    s.chart_ = sublattice_coordinates(pts);
    s.poly_ = LatticePolytope(s.chart_.dim, s.chart_.coords);

    for (const Vec& pt : pts) {
        Vec g = pt;
        g.push_back(1);
        s.generators_.push_back(std::move(g));
    }

    s.internal_gens_ = s.poly_.points();
    // fail-fast search order: decreasing coordinate sum, then lexicographic
    std::stable_sort(s.internal_gens_.begin(), s.internal_gens_.end(), [](const Vec& a, const Vec& b) {
        Int sa = std::accumulate(a.begin(), a.end(), Int{0});
        Int sb = std::accumulate(b.begin(), b.end(), Int{0});
        if (sa != sb) return sa > sb;
        return a < b;
    });

    // group ZA in chart coordinates: (x, m) with x - m*g0 in Z{g_i - g0}
    s.group_origin_ = s.poly_.points().front();
    std::vector<Vec> diffs;
    for (const Vec& g : s.poly_.points())
        if (g != s.group_origin_) diffs.push_back(vec_sub(g, s.group_origin_));
    if (diffs.empty()) {
        s.group_basis_ = IntMatrix(s.chart_.dim, 0);
        s.lattice_index_one_ = (s.chart_.dim == 0);
    } else {
        HermiteForm hf = hermite_normal_form(IntMatrix::from_columns(diffs));
        IntMatrix basis(s.chart_.dim, hf.rank);
        for (std::size_t j = 0; j < hf.rank; ++j)
            for (std::size_t i = 0; i < s.chart_.dim; ++i) basis.at(i, j) = hf.H.at(i, j);
        s.group_basis_ = std::move(basis);
        s.lattice_index_one_ = true;
        if (hf.rank < s.chart_.dim) {
            s.lattice_index_one_ = false;
        } else {
            for (std::size_t j = 0; j < hf.rank; ++j)
                if (s.group_basis_.at(hf.pivot_rows[j], j) != 1) s.lattice_index_one_ = false;
        }
    }
    return s;
}

std::optional<Vec> GradedSemigroup::to_internal(const Vec& x) const {
    if (x.size() != ambient_dim_) throw invalid_input("GradedSemigroup: dimension mismatch");
    Int height = x.back();
    Vec pt(x.begin(), x.end() - 1);
    Vec shifted = vec_sub(pt, vec_scale(height, chart_.origin));
    auto coords = solve_in_hnf_lattice(chart_.basis, shifted);
    if (!coords) return std::nullopt;
    return coords;
}

Vec GradedSemigroup::to_ambient(const Vec& internal, Int height) const {
    Vec pt = vec_scale(height, chart_.origin);
    for (std::size_t j = 0; j < chart_.dim; ++j)
        for (std::size_t r = 0; r < pt.size(); ++r)
            pt[r] = checked_add(pt[r], checked_mul(chart_.basis.at(r, j), internal[j]));
    pt.push_back(height);
    return pt;
}

bool GradedSemigroup::cone_member(const Vec& x) const {
    Int height = x.back();
    if (height < 0) return false;
    auto coords = to_internal(x);
    if (!coords) return false;
    if (poly_.ambient_dim() == 0) return true;
    return poly_.hrep().contains(*coords, height);
}

bool GradedSemigroup::group_member(const Vec& x) const {
    Int height = x.back();
    auto coords = to_internal(x);
    if (!coords) return false;
    Vec shifted = vec_sub(*coords, vec_scale(height, group_origin_));
    if (group_basis_.cols() == 0) return is_zero(shifted);
    return solve_in_hnf_lattice(group_basis_, shifted).has_value();
}

bool GradedSemigroup::member_internal(const Vec& coords, Int height) const {
    if (height == 0) return is_zero(coords);
    if (poly_.ambient_dim() == 0) return true;  // a point polytope: only multiples of it
    if (!poly_.hrep().contains(coords, height)) return false;
    if (height == 1) return std::binary_search(poly_.points().begin(), poly_.points().end(), coords);

    Vec key = coords;
    key.push_back(height);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    bool ok = false;
    for (const Vec& g : internal_gens_) {
        if (member_internal(vec_sub(coords, g), height - 1)) {
            ok = true;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(std::move(key), ok);
    return ok;
}

bool GradedSemigroup::is_member(const Vec& x) const {
    Int height = x.back();
    if (height < 0) return false;
    auto coords = to_internal(x);
    if (!coords) return false;
    return member_internal(*coords, height);
}

std::optional<std::vector<Vec>> GradedSemigroup::decompose(const Vec& x) const {
    if (!is_member(x)) return std::nullopt;
    Int height = x.back();
    Vec coords = *to_internal(x);
    std::vector<Vec> witness;
    while (height > 0) {
        for (const Vec& g : internal_gens_) {
            if (member_internal(vec_sub(coords, g), height - 1)) {
                witness.push_back(to_ambient(g, 1));
                coords = vec_sub(coords, g);
                --height;
                break;
            }
        }
    }
    return witness;
}

std::vector<Vec> GradedSemigroup::holes_at_degree(Int n) const {
    if (n < 1) throw invalid_input("holes_at_degree: degree must be >= 1");
    std::vector<Vec> out;
    if (n == 1) return out;  // height-1 cone points are exactly the generators
    for (const Vec& pt : poly_.lattice_points(n)) {
        Vec amb = to_ambient(pt, n);
        if (!group_member(amb)) continue;
        if (!member_internal(pt, n)) out.push_back(std::move(amb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int GradedSemigroup::default_budget() const {
    return std::max<Int>(static_cast<Int>(poly_.ambient_dim()) + 3, 8);
}

HoleReport GradedSemigroup::enumerate_holes(Int degree_budget) const {
    if (degree_budget < 2) throw invalid_input("enumerate_holes: degree budget too small");
    HoleReport report;
    report.degree_budget = degree_budget;
    const Int dim = static_cast<Int>(poly_.ambient_dim());

    std::vector<Vec> prev;  // internal coords of the previous level's holes
    for (Int n = 2; n <= degree_budget; ++n) {
        std::vector<Vec> level_internal;
        if (n <= dim - 1 || n == 2) {
            // brute force below the propagation threshold
            for (const Vec& pt : poly_.lattice_points(n)) {
                if (!group_member(to_ambient(pt, n))) continue;
                if (!member_internal(pt, n)) level_internal.push_back(pt);
            }
        } else {
            // height n >= dim: every cone point splits off a generator, so a
            // hole here is (hole at n-1) + generator
            std::set<Vec> candidates;
            for (const Vec& h : prev)
                for (const Vec& g : internal_gens_) {
                    Vec c = vec_add(h, g);
                    if (poly_.hrep().contains(c, n)) candidates.insert(std::move(c));
                }
            for (const Vec& c : candidates)
                if (!member_internal(c, n)) level_internal.push_back(c);
            std::sort(level_internal.begin(), level_internal.end());
        }

        std::vector<Vec> level;
        for (const Vec& pt : level_internal) level.push_back(to_ambient(pt, n));
        std::sort(level.begin(), level.end());
        report.holes_by_degree[n] = level;

        if (level_internal.empty() && n >= dim - 1) {
            report.certified_complete = true;
            report.stop_reason = StopReason::propagation_empty;
            return report;
        }
        prev = std::move(level_internal);
    }
    report.certified_complete = false;
    report.stop_reason = prev.empty() ? StopReason::degree_budget : StopReason::infinite_suspected;
    if (!prev.empty()) {
        for (const Vec& pt : prev) report.probe_evidence.push_back(to_ambient(pt, degree_budget));
        std::sort(report.probe_evidence.begin(), report.probe_evidence.end());
    }
    return report;
}

KNormalReport GradedSemigroup::is_k_normal(Int k, Int horizon) const {
    if (k < 1) throw invalid_input("is_k_normal: k must be >= 1");
    if (horizon < k) throw invalid_input("is_k_normal: horizon must be >= k");
    KNormalReport report;
    report.k = k;
    report.horizon = horizon;
    report.holds_up_to_horizon = true;
    const Int dim = static_cast<Int>(poly_.ambient_dim());

    bool chain_alive = true;  // all levels from k so far empty
    for (Int n = std::max<Int>(k, 2); n <= horizon; ++n) {
        std::vector<Vec> level = holes_at_degree(n);
        if (!level.empty()) {
            report.holds_up_to_horizon = false;
            report.failures[n] = level;
            chain_alive = false;
        }
        if (chain_alive && n >= dim - 1) {
            // every level k..n is empty and n is past the propagation
            // threshold: no hole can exist at any degree >= k
            report.certified_all_degrees = true;
            return report;
        }
    }
    return report;
}

Verdict GradedSemigroup::is_normal(Int degree_budget) const {
    if (degree_budget <= 0) degree_budget = default_budget();
    HoleReport report = enumerate_holes(degree_budget);
    if (report.total_holes() > 0) return Verdict::no;
    return report.certified_complete ? Verdict::yes : Verdict::unknown;
}

std::map<std::pair<Int, Int>, bool> verify_slice_decompositions(
    const LatticePolytope& p, const std::vector<SliceCase>& cases,
    const std::vector<Vec>& degree2_extras) {
    std::map<std::pair<Int, Int>, bool> out;
    std::vector<Vec> p0 = p.slice(1, 0, 0);
    std::vector<Vec> p1 = p.slice(1, 1, 0);

    auto sumset = [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
        std::set<Vec> s;
        for (const Vec& x : a)
            for (const Vec& y : b) s.insert(vec_add(x, y));
        return std::vector<Vec>(s.begin(), s.end());
    };

    for (const SliceCase& c : cases) {
        if (c.k < 0 || c.k > c.n) throw invalid_input("verify_slice_decompositions: need 0 <= k <= n");
        std::vector<Vec> expected = {Vec(p.ambient_dim(), 0)};
        for (Int t = 0; t < c.n - c.k; ++t) expected = sumset(expected, p0);
        for (Int t = 0; t < c.k; ++t) expected = sumset(expected, p1);
        std::set<Vec> expect_set(expected.begin(), expected.end());

        bool ok;
        std::vector<Vec> actual = p.slice(c.n, c.k, 0);
        std::set<Vec> actual_set(actual.begin(), actual.end());
        if (c.n == 2 && c.k == 1) {
            // sumset plus exactly the expected degree-2 holes
            std::set<Vec> with_extras = expect_set;
            bool disjoint = true;
            for (const Vec& e : degree2_extras) {
                if (expect_set.count(e)) disjoint = false;
                with_extras.insert(e);
            }
            ok = disjoint && actual_set == with_extras;
        } else {
            ok = actual_set == expect_set;
        }
        out[{c.n, c.k}] = ok;
    }
    return out;
}

}  // namespace polyhole
