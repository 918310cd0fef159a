#include "polyhole/dd.hpp"

#include <algorithm>
#include <cstdint>

#include "polyhole/errors.hpp"

namespace polyhole {

namespace {

// zero-set over processed constraints, fixed word count
struct ZeroSet {
    std::vector<std::uint64_t> bits;
    explicit ZeroSet(std::size_t words = 0) : bits(words, 0) {}
    void set(std::size_t i) { bits[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool contains(const ZeroSet& other) const {  // this >= other as sets
        for (std::size_t w = 0; w < bits.size(); ++w)
            if ((other.bits[w] & ~bits[w]) != 0) return false;
        return true;
    }
    ZeroSet intersect(const ZeroSet& other) const {
        ZeroSet r(bits.size());
        for (std::size_t w = 0; w < bits.size(); ++w) r.bits[w] = bits[w] & other.bits[w];
        return r;
    }
};

struct Ray {
    Vec v;
    ZeroSet zeros;
};

void sign_normalize(Vec& v) {
    for (Int x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (Int& y : v) y = checked_neg(y);
            break;
        }
    }
}

}  // namespace

std::vector<Vec> dual_extreme_rays(std::size_t dim, const std::vector<Vec>& constraints) {
    const std::size_t words = (constraints.size() + 63) / 64;

    // start from the full space: lineality basis, no rays
    std::vector<Vec> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e(dim, 0);
        e[i] = 1;
        lineality.push_back(e);
    }
    std::vector<Ray> rays;

    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        const Vec& g = constraints[ci];
        if (g.size() != dim) throw invalid_input("dual_extreme_rays: constraint dimension mismatch");

        // pivot on lineality first
        std::size_t pivot = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (checked_dot(g, lineality[i]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < lineality.size()) {
            Vec l0 = lineality[pivot];
            Int v0 = checked_dot(g, l0);
            if (v0 < 0) {
                for (Int& x : l0) x = checked_neg(x);
                v0 = checked_neg(v0);
            }
            std::vector<Vec> new_lin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == pivot) continue;
                Int vi = checked_dot(g, lineality[i]);
                Vec adj = vec_sub(vec_scale(v0, lineality[i]), vec_scale(vi, l0));
                make_primitive(adj);
                sign_normalize(adj);
                new_lin.push_back(adj);
            }
            for (Ray& r : rays) {
                Int vr = checked_dot(g, r.v);
                if (vr != 0) {
                    r.v = vec_sub(vec_scale(v0, r.v), vec_scale(vr, l0));
                    make_primitive(r.v);
                }
                r.zeros.set(ci);  // g vanishes on every adjusted ray
            }
            Ray nr{l0, ZeroSet(words)};
            // l0 was lineality: tight on every earlier constraint, strict on g
            for (std::size_t k = 0; k < ci; ++k) nr.zeros.set(k);
            rays.push_back(std::move(nr));
            lineality = std::move(new_lin);
            continue;
        }

        // standard DD step on rays
        std::vector<Ray> pos, zero, neg;
        std::vector<Int> vals(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) vals[i] = checked_dot(g, rays[i].v);
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] > 0)
                pos.push_back(rays[i]);
            else if (vals[i] == 0) {
                Ray r = rays[i];
                r.zeros.set(ci);
                zero.push_back(std::move(r));
            } else
                neg.push_back(rays[i]);
        }
        if (neg.empty()) {
            rays = pos;
            for (Ray& r : zero) rays.push_back(std::move(r));
            continue;
        }
        std::vector<Ray> created;
        for (const Ray& rp : pos) {
            for (const Ray& rn : neg) {
                ZeroSet common = rp.zeros.intersect(rn.zeros);
                // combinatorial adjacency: no third ray's zero set contains the
                // common tight set
                bool adjacent = true;
                for (const Ray& other : rays) {
                    if (&other == &rp || &other == &rn) continue;
                    if (other.v == rp.v || other.v == rn.v) continue;
                    if (other.zeros.contains(common)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Int a = checked_dot(g, rp.v);
                Int b = checked_neg(checked_dot(g, rn.v));
                Vec comb = vec_add(vec_scale(b, rp.v), vec_scale(a, rn.v));
                make_primitive(comb);
                Ray nr{std::move(comb), common};
                nr.zeros.set(ci);
                created.push_back(std::move(nr));
            }
        }
        rays = pos;
        for (Ray& r : zero) rays.push_back(std::move(r));
        for (Ray& r : created) rays.push_back(std::move(r));
    }

    if (!lineality.empty()) throw invalid_input("dual_extreme_rays: cone is not pointed");

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace polyhole
