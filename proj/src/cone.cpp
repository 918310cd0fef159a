#include "polyhole/cone.hpp"

#include <algorithm>
#include <unordered_set>

#include "polyhole/dd.hpp"

namespace polyhole {

namespace {

// determinant sign-free solve floor(M^{-1} x) by Cramer with exact integers
Vec cramer_floor(const IntMatrix& m, Int det, const Vec& x) {
    std::size_t k = m.rows();
    Vec q(k);
    for (std::size_t i = 0; i < k; ++i) {
        IntMatrix mi = m;
        for (std::size_t r = 0; r < k; ++r) mi.at(r, i) = x[r];
        q[i] = floor_div(mi.determinant(), det);
    }
    return q;
}

// extreme rays among the generators of a full-dimensional pointed cone, by
// tight-facet rank
std::vector<Vec> extreme_among(std::size_t dim, const std::vector<Vec>& gens,
                               const std::vector<Vec>& facet_normals) {
    std::vector<Vec> out;
    for (const Vec& g : gens) {
        if (is_zero(g)) continue;
        std::vector<Vec> tight;
        for (const Vec& a : facet_normals)
            if (checked_dot(a, g) == 0) tight.push_back(a);
        if (tight.size() + 1 < dim) continue;
        if (IntMatrix::from_rows(tight).rank() == dim - 1) {
            Vec r = g;
            make_primitive(r);
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// pulling triangulation of a pointed cone given by its extreme rays; returns
// maximal simplicial subcones as ray subsets; works in span coordinates
std::vector<std::vector<Vec>> triangulate(std::size_t ambient_dim, const std::vector<Vec>& rays) {
    SpanLattice sl = span_lattice_coordinates(ambient_dim, rays);
    std::size_t k = sl.dim;
    if (k == 0) return {};
    std::vector<Vec> local = sl.coords;
    std::sort(local.begin(), local.end());

    std::vector<std::vector<Vec>> simplices_local;
    if (local.size() == k) {
        simplices_local.push_back(local);
    } else {
        std::vector<Vec> facets = dual_extreme_rays(k, local);
        const Vec& apex = local.front();
        for (const Vec& a : facets) {
            if (checked_dot(a, apex) == 0) continue;  // apex lies on this facet
            std::vector<Vec> on_facet;
            for (const Vec& r : local)
                if (checked_dot(a, r) == 0) on_facet.push_back(r);
            for (auto& sub : triangulate(k, on_facet)) {
                sub.push_back(apex);
                simplices_local.push_back(std::move(sub));
            }
        }
    }

    // map back to ambient coordinates
    std::vector<std::vector<Vec>> out;
    for (const auto& simplex : simplices_local) {
        std::vector<Vec> amb;
        for (const Vec& c : simplex) {
            Vec v(ambient_dim, 0);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t r = 0; r < ambient_dim; ++r)
                    v[r] = checked_add(v[r], checked_mul(sl.basis.at(r, j), c[j]));
            amb.push_back(std::move(v));
        }
        out.push_back(std::move(amb));
    }
    return out;
}

// lattice points of the half-open parallelepiped {sum λ_i s_i : 0 <= λ_i < 1}
// spanned by independent integer vectors
std::vector<Vec> parallelepiped_points(std::size_t ambient_dim, const std::vector<Vec>& simplex) {
    SpanLattice sl = span_lattice_coordinates(ambient_dim, simplex);
    std::size_t k = sl.dim;
    if (k != simplex.size()) throw invalid_input("parallelepiped_points: dependent generators");
    IntMatrix m = IntMatrix::from_columns(sl.coords);
    Int det = m.determinant();
    Int vol = det < 0 ? checked_neg(det) : det;
    std::vector<Vec> out;
    if (vol == 1) return out;  // only the origin, which we drop

    // residue representatives of Z^k / M Z^k from the Smith form:
    // M = U^{-1} S V^{-1}, so {U^{-1} c : 0 <= c_i < s_i} covers the quotient
    SmithForm sf = smith_normal_form(m);
    // columns of U^{-1}: solve U X = I by Cramer per column (k is tiny)
    Int udet = sf.U.determinant();
    std::vector<Vec> ucols;
    for (std::size_t j = 0; j < k; ++j) {
        Vec e(k, 0);
        e[j] = 1;
        Vec col(k);
        for (std::size_t i = 0; i < k; ++i) {
            IntMatrix mi = sf.U;
            for (std::size_t r = 0; r < k; ++r) mi.at(r, i) = e[r];
            Int num = mi.determinant();
            if (num % udet != 0) throw invalid_input("parallelepiped_points: U not unimodular");
            col[i] = num / udet;
        }
        ucols.push_back(col);
    }

    Vec counter(k, 0);
    for (;;) {
        // x = U^{-1} counter
        Vec x(k, 0);
        for (std::size_t j = 0; j < k; ++j)
            if (counter[j] != 0)
                for (std::size_t i = 0; i < k; ++i)
                    x[i] = checked_add(x[i], checked_mul(ucols[j][i], counter[j]));
        // reduce into the fundamental domain: t = x - M floor(M^{-1} x)
        Vec q = cramer_floor(m, det, x);
        Vec t = x;
        for (std::size_t j = 0; j < k; ++j)
            if (q[j] != 0)
                for (std::size_t i = 0; i < k; ++i)
                    t[i] = checked_sub(t[i], checked_mul(m.at(i, j), q[j]));
        if (!is_zero(t)) {
            Vec amb(ambient_dim, 0);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t r = 0; r < ambient_dim; ++r)
                    amb[r] = checked_add(amb[r], checked_mul(sl.basis.at(r, j), t[j]));
            out.push_back(std::move(amb));
        }
        // next counter in prod [0, s_i)
        std::size_t j = 0;
        while (j < k) {
            ++counter[j];
            if (counter[j] < sf.elementary_divisors[j]) break;
            counter[j] = 0;
            ++j;
        }
        if (j == k) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<Vec>& gens) {
    Cone c;
    c.ambient_dim = ambient_dim;
    std::vector<Vec> nonzero;
    for (const Vec& g : gens)
        if (!is_zero(g)) nonzero.push_back(g);
    if (nonzero.empty()) throw invalid_input("Cone: no nonzero generators");
    if (span_lattice_coordinates(ambient_dim, nonzero).dim != ambient_dim)
        throw invalid_input("Cone: generators do not span the ambient space");
    c.facet_normals = dual_extreme_rays(ambient_dim, nonzero);  // throws if not pointed... see below
    // pointedness of the primal: the dual must be full-dimensional
    if (span_lattice_coordinates(ambient_dim, c.facet_normals).dim != ambient_dim)
        throw invalid_input("Cone: generators span a non-pointed cone");
    c.rays = extreme_among(ambient_dim, nonzero, c.facet_normals);
    std::sort(c.facet_normals.begin(), c.facet_normals.end());
    return c;
}

bool Cone::contains(const Vec& y) const {
    for (const Vec& a : facet_normals)
        if (checked_dot(a, y) < 0) return false;
    return true;
}

Vec Cone::positive_grading() const {
    Vec w(ambient_dim, 0);
    for (const Vec& a : facet_normals) w = vec_add(w, a);
    for (const Vec& r : rays)
        if (checked_dot(w, r) <= 0)
            throw invalid_input("Cone::positive_grading: grading not positive (cone not pointed?)");
    return w;
}

Cone tangent_cone(const LatticePolytope& p, const Vec& vertex) {
    const auto& verts = p.vertices();
    if (!std::binary_search(verts.begin(), verts.end(), vertex))
        throw invalid_input("tangent_cone: not a vertex");
    Cone c;
    c.ambient_dim = p.ambient_dim();
    for (const Halfspace& h : p.hrep().halfspaces)
        if (checked_dot(h.normal, vertex) == h.offset) {
            Vec a = h.normal;
            for (Int& x : a) x = checked_neg(x);
            c.facet_normals.push_back(std::move(a));
        }
    std::vector<Vec> gens;
    for (const Vec& pt : p.lattice_points(1))
        if (pt != vertex) gens.push_back(vec_sub(pt, vertex));
    c.rays = extreme_among(c.ambient_dim, gens, c.facet_normals);
    std::sort(c.facet_normals.begin(), c.facet_normals.end());
    return c;
}

HilbertBasis hilbert_basis(const Cone& c) {
    if (c.rays.empty()) throw invalid_input("hilbert_basis: empty cone");
    Vec w = c.positive_grading();  // also certifies pointedness

    // candidate generators: rays plus parallelepiped points of a triangulation
    std::vector<Vec> candidates = c.rays;
    for (const auto& simplex : triangulate(c.ambient_dim, c.rays))
        for (Vec& t : parallelepiped_points(c.ambient_dim, simplex))
            candidates.push_back(std::move(t));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::unordered_set<Vec, VecHash> cand_set(candidates.begin(), candidates.end());
    std::stable_sort(candidates.begin(), candidates.end(), [&](const Vec& a, const Vec& b) {
        return checked_dot(w, a) < checked_dot(w, b);
    });

    HilbertBasis basis;
    for (const Vec& x : candidates) {
        // cheap rejection: a split into two candidates
        bool reducible = false;
        for (const Vec& y : candidates) {
            if (checked_dot(w, y) >= checked_dot(w, x)) break;
            Vec z = vec_sub(x, y);
            if (!is_zero(z) && cand_set.count(z)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) {
            // exact test: lattice points of {z in C : x - z in C} besides 0, x
            std::vector<LinearConstraint> cons;
            for (const Vec& a : c.facet_normals) {
                Vec neg = a;
                for (Int& t : neg) t = checked_neg(t);
                cons.push_back({neg, 0});                       // a . z >= 0
                cons.push_back({a, checked_dot(a, x)});         // a . z <= a . x
            }
            Int wx = checked_dot(w, x);
            std::vector<std::array<Int, 2>> box(c.ambient_dim, {0, 0});
            for (std::size_t j = 0; j < c.ambient_dim; ++j) {
                Int lo = 0, hi = 0;
                for (const Vec& r : c.rays) {
                    Int wr = checked_dot(w, r);
                    if (r[j] > 0) hi = std::max(hi, ceil_div(checked_mul(wx, r[j]), wr));
                    if (r[j] < 0) lo = std::min(lo, floor_div(checked_mul(wx, r[j]), wr));
                }
                box[j] = {lo, hi};
            }
            for (const Vec& z : enumerate_integer_points(cons, box)) {
                if (is_zero(z) || z == x) continue;
                Vec rest = vec_sub(x, z);
                if (!is_zero(rest)) {
                    reducible = true;
                    break;
                }
            }
        }
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

}  // namespace polyhole
