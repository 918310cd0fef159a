#include "polyhole/polytope.hpp"

#include <algorithm>
#include <limits>

#include "polyhole/dd.hpp"

namespace polyhole {

bool HRep::contains(const Vec& x, Int dilation) const {
    if (x.size() != ambient_dim) throw invalid_input("HRep::contains: dimension mismatch");
    if (dilation < 0) return false;
    for (const Halfspace& h : halfspaces)
        if (checked_dot(h.normal, x) > checked_mul(dilation, h.offset)) return false;
    return true;
}

namespace {

constexpr std::size_t kMaxAmbientDim = 10;
constexpr std::size_t kMaxEnumeratedPoints = 5000000;

struct Enumerator {
    const std::vector<LinearConstraint>& cons;
    std::vector<std::array<Int, 2>> bounds;
    std::vector<bool> fixed;
    std::vector<Vec>& out;

    // one narrowing sweep; returns false when some interval empties
    bool narrow() {
        bool changed = true;
        int rounds = 0;
        while (changed && rounds < 4) {
            changed = false;
            ++rounds;
            for (const LinearConstraint& c : cons) {
                // minimal achievable value of coeffs . x over the current box
                Int min_sum = 0;
                for (std::size_t j = 0; j < bounds.size(); ++j) {
                    Int a = c.coeffs[j];
                    if (a == 0) continue;
                    min_sum = checked_add(min_sum, checked_mul(a, a > 0 ? bounds[j][0] : bounds[j][1]));
                }
                if (min_sum > c.bound) return false;
                for (std::size_t j = 0; j < bounds.size(); ++j) {
                    Int a = c.coeffs[j];
                    if (a == 0 || fixed[j]) continue;
                    Int partial = checked_sub(min_sum, checked_mul(a, a > 0 ? bounds[j][0] : bounds[j][1]));
                    Int slack = checked_sub(c.bound, partial);
                    if (a > 0) {
                        Int hi = floor_div(slack, a);
                        if (hi < bounds[j][1]) {
                            bounds[j][1] = hi;
                            changed = true;
                        }
                    } else {
                        Int lo = ceil_div(slack, a);
                        if (lo > bounds[j][0]) {
                            bounds[j][0] = lo;
                            changed = true;
                        }
                    }
                    if (bounds[j][0] > bounds[j][1]) return false;
                }
            }
        }
        return true;
    }

    void run() {
        if (!narrow()) return;
        // pick the narrowest unfixed coordinate
        std::size_t best = bounds.size();
        Int best_range = std::numeric_limits<Int>::max();
        for (std::size_t j = 0; j < bounds.size(); ++j) {
            if (fixed[j]) continue;
            Int range = checked_sub(bounds[j][1], bounds[j][0]);
            if (range < best_range) {
                best_range = range;
                best = j;
            }
        }
        if (best == bounds.size()) {
            Vec point(bounds.size());
            for (std::size_t j = 0; j < bounds.size(); ++j) point[j] = bounds[j][0];
            for (const LinearConstraint& c : cons)
                if (checked_dot(c.coeffs, point) > c.bound) return;
            if (out.size() >= kMaxEnumeratedPoints)
                throw budget_exceeded("enumerate_integer_points: point budget exceeded");
            out.push_back(std::move(point));
            return;
        }
        auto saved = bounds;
        for (Int v = saved[best][0]; v <= saved[best][1]; ++v) {
            bounds = saved;
            bounds[best] = {v, v};
            fixed[best] = true;
            run();
        }
        fixed[best] = false;
        bounds = saved;
    }
};

}  // namespace

std::vector<Vec> enumerate_integer_points(const std::vector<LinearConstraint>& constraints,
                                          const std::vector<std::array<Int, 2>>& box) {
    for (const auto& b : box)
        if (b[0] > b[1]) return {};
    std::vector<Vec> out;
    Enumerator e{constraints, box, std::vector<bool>(box.size(), false), out};
    e.run();
    std::sort(out.begin(), out.end());
    return out;
}

struct LatticePolytope::Cache {
    std::mutex mutex;
    std::optional<std::size_t> dim;
    std::optional<HRep> hrep;
    std::optional<std::vector<Vec>> vertices;
    std::optional<SublatticeCoords> chart;
};

LatticePolytope::LatticePolytope(std::size_t ambient_dim, std::vector<Vec> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)), cache_(std::make_shared<Cache>()) {
    if (points_.empty()) throw invalid_input("LatticePolytope: empty point set");
    if (ambient_dim_ > kMaxAmbientDim)
        throw invalid_input("LatticePolytope: unsupported ambient dimension");
    for (const Vec& p : points_)
        if (p.size() != ambient_dim_) throw invalid_input("LatticePolytope: point dimension mismatch");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

const SublatticeCoords& LatticePolytope::chart() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->chart) cache_->chart = sublattice_coordinates(points_);
    return *cache_->chart;
}

std::size_t LatticePolytope::dim() const { return chart().dim; }

LatticePolytope LatticePolytope::restricted() const {
    const SublatticeCoords& sc = chart();
    return LatticePolytope(sc.dim, sc.coords);
}

const HRep& LatticePolytope::hrep() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->hrep) return *cache_->hrep;
    }
    if (dim() == 0) throw invalid_input("facet_enumeration: refusing a 0-dimensional polytope");
    if (dim() != ambient_dim_)
        throw invalid_input(
            "facet_enumeration: polytope is not full-dimensional; restrict to sublattice "
            "coordinates first");

    // facets of P = extreme rays of the dual of the cone over {(p, 1)}
    std::vector<Vec> constraints;
    constraints.reserve(points_.size());
    for (const Vec& p : points_) {
        Vec c = p;
        c.push_back(1);
        constraints.push_back(std::move(c));
    }
    std::vector<Vec> rays = dual_extreme_rays(ambient_dim_ + 1, constraints);

    HRep rep;
    rep.ambient_dim = ambient_dim_;
    for (const Vec& r : rays) {
        Halfspace h;
        h.normal.assign(r.begin(), r.end() - 1);
        for (Int& x : h.normal) x = checked_neg(x);
        h.offset = r.back();
        rep.halfspaces.push_back(std::move(h));
    }
    std::sort(rep.halfspaces.begin(), rep.halfspaces.end());

    // sanity: every generating point satisfies every inequality
    for (const Vec& p : points_)
        if (!rep.contains(p, 1)) throw invalid_input("facet_enumeration: internal consistency failure");

    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->hrep) cache_->hrep = std::move(rep);
    return *cache_->hrep;
}

const std::vector<Vec>& LatticePolytope::vertices() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->vertices) return *cache_->vertices;
    }
    std::vector<Vec> verts;
    if (dim() == 0) {
        verts = points_;
    } else if (dim() != ambient_dim_) {
        // compute in the chart, map back
        const SublatticeCoords& sc = chart();
        LatticePolytope q = restricted();
        for (const Vec& vq : q.vertices()) {
            Vec v = sc.origin;
            for (std::size_t j = 0; j < sc.dim; ++j)
                for (std::size_t r = 0; r < ambient_dim_; ++r)
                    v[r] = checked_add(v[r], checked_mul(sc.basis.at(r, j), vq[j]));
            verts.push_back(std::move(v));
        }
    } else {
        const HRep& rep = hrep();
        for (const Vec& p : points_) {
            std::vector<Vec> tight;
            for (const Halfspace& h : rep.halfspaces)
                if (checked_dot(h.normal, p) == h.offset) tight.push_back(h.normal);
            if (!tight.empty() && IntMatrix::from_rows(tight).rank() == ambient_dim_)
                verts.push_back(p);
        }
    }
    std::sort(verts.begin(), verts.end());
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->vertices) cache_->vertices = std::move(verts);
    return *cache_->vertices;
}

std::vector<Vec> LatticePolytope::lattice_points(Int dilation) const {
    if (dilation < 0) throw invalid_input("lattice_points: negative dilation");
    if (dilation == 0) return {Vec(ambient_dim_, 0)};
    if (dim() != ambient_dim_) {
        // enumerate in the chart and map back
        const SublatticeCoords& sc = chart();
        std::vector<Vec> out;
        if (dim() == 0) {
            out.push_back(vec_scale(dilation, sc.origin));
            return out;
        }
        for (const Vec& q : restricted().lattice_points(dilation)) {
            Vec v = vec_scale(dilation, sc.origin);
            for (std::size_t j = 0; j < sc.dim; ++j)
                for (std::size_t r = 0; r < ambient_dim_; ++r)
                    v[r] = checked_add(v[r], checked_mul(sc.basis.at(r, j), q[j]));
            out.push_back(std::move(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    const HRep& rep = hrep();
    std::vector<LinearConstraint> cons;
    cons.reserve(rep.halfspaces.size());
    for (const Halfspace& h : rep.halfspaces)
        cons.push_back({h.normal, checked_mul(dilation, h.offset)});
    std::vector<std::array<Int, 2>> box(ambient_dim_);
    for (std::size_t j = 0; j < ambient_dim_; ++j) {
        Int lo = points_[0][j], hi = points_[0][j];
        for (const Vec& p : points_) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        box[j] = {checked_mul(dilation, lo), checked_mul(dilation, hi)};
    }
    return enumerate_integer_points(cons, box);
}

std::vector<Vec> LatticePolytope::slice(Int dilation, Int value, std::size_t axis) const {
    if (axis >= ambient_dim_) throw invalid_input("slice: axis out of range");
    if (dilation < 0) throw invalid_input("slice: negative dilation");
    if (dilation == 0) {
        if (value != 0) return {};
        return {Vec(ambient_dim_, 0)};
    }
    if (dim() != ambient_dim_) {
        std::vector<Vec> out;
        for (const Vec& p : lattice_points(dilation))
            if (p[axis] == value) out.push_back(p);
        return out;
    }
    const HRep& rep = hrep();
    std::vector<LinearConstraint> cons;
    for (const Halfspace& h : rep.halfspaces)
        cons.push_back({h.normal, checked_mul(dilation, h.offset)});
    std::vector<std::array<Int, 2>> box(ambient_dim_);
    for (std::size_t j = 0; j < ambient_dim_; ++j) {
        Int lo = points_[0][j], hi = points_[0][j];
        for (const Vec& p : points_) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        box[j] = {checked_mul(dilation, lo), checked_mul(dilation, hi)};
    }
    if (value < box[axis][0] || value > box[axis][1]) return {};
    box[axis] = {value, value};
    return enumerate_integer_points(cons, box);
}

LatticePolytope LatticePolytope::restrict_to_facet(const Halfspace& f) const {
    const HRep& rep = hrep();
    Halfspace key = f;
    make_primitive(key.normal);
    bool found = false;
    for (const Halfspace& h : rep.halfspaces)
        if (h == key) found = true;
    if (!found) throw invalid_input("restrict_to_facet: halfspace is not a facet");
    std::vector<Vec> on_facet;
    for (const Vec& p : lattice_points(1))
        if (checked_dot(key.normal, p) == key.offset) on_facet.push_back(p);
    SublatticeCoords sc = sublattice_coordinates(on_facet);
    return LatticePolytope(sc.dim, sc.coords);
}

LatticePolytope LatticePolytope::pyramid() const {
    std::vector<Vec> pts;
    pts.reserve(points_.size() + 1);
    for (const Vec& p : points_) {
        Vec q = p;
        q.push_back(1);
        pts.push_back(std::move(q));
    }
    pts.push_back(Vec(ambient_dim_ + 1, 0));
    return LatticePolytope(ambient_dim_ + 1, std::move(pts));
}

HRep facet_enumeration(const LatticePolytope& p) { return p.hrep(); }

}  // namespace polyhole
