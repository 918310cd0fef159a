#include "polyhole/families.hpp"

#include <algorithm>

namespace polyhole {

namespace {

Vec unit(std::size_t d, std::size_t i) {  // e_{i+1} in 0-based storage
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

// e_2 + ... + e_{d-1}
Vec middle_ones(std::size_t d) {
    Vec v(d, 0);
    for (std::size_t i = 1; i + 1 < d; ++i) v[i] = 1;
    return v;
}

}  // namespace

void PhdSpec::validate() const {
    if (h < 1 || d < 3) throw invalid_input("PhdSpec: requires h >= 1 and d >= 3");
    if (d > 8) throw invalid_input("PhdSpec: d > 8 exceeds the supported desk scale");
}

LatticePolytope build_phd(const PhdSpec& spec) {
    spec.validate();
    std::size_t d = static_cast<std::size_t>(spec.d);
    Int h = spec.h;
    Vec ones = middle_ones(d);
    Vec ed = unit(d, d - 1);
    Vec e1 = unit(d, 0);

    std::vector<Vec> pts;
    pts.push_back(Vec(d, 0));                                  // u_1
    pts.push_back(ed);                                         // u_2
    pts.push_back(ones);                                       // u_3
    pts.push_back(vec_scale(h, vec_add(ones, ed)));            // u_4
    pts.push_back(vec_add(vec_scale(h - 1, ones), vec_scale(h, ed)));  // u_5
    pts.push_back(vec_add(vec_scale(h, ones), vec_scale(h - 1, ed)));  // u_6
    pts.push_back(vec_add(e1, vec_scale(4, ed)));              // u_7
    pts.push_back(vec_add(e1, vec_scale(5, ed)));              // u_8
    pts.push_back(vec_add(e1, ones));                          // u_9
    pts.push_back(vec_add(vec_add(e1, ones), ed));             // u_10
    for (std::size_t i = 1; i + 1 < d; ++i) {
        pts.push_back(unit(d, i));                 // v_i
        pts.push_back(vec_add(unit(d, i), ed));    // v_i'
    }
    return LatticePolytope(d, std::move(pts));
}

HRep build_expected_hrep(const PhdSpec& spec) {
    spec.validate();
    std::size_t d = static_cast<std::size_t>(spec.d);
    Int h = spec.h;
    std::vector<Halfspace> out;

    auto push = [&](Vec normal, Int offset, std::string label) {
        Int g = content(normal);
        g = gcd_int(g, offset);
        if (g > 1) {
            for (Int& x : normal) x /= g;
            offset /= g;
        }
        out.push_back({std::move(normal), offset, std::move(label)});
    };

    {
        Vec a(d, 0);
        a[0] = -1;
        push(std::move(a), 0, "H0 (x1 = 0, P on >= side)");
    }
    {
        Vec a(d, 0);
        a[d - 1] = -1;
        push(std::move(a), 0, "H1 (xd = 0, P on >= side)");
    }
    for (std::size_t i = 1; i + 1 < d; ++i) {
        std::string suffix = ", i=" + std::to_string(i + 1) + ", P on <= side)";
        // every family below is stated as a . x = b with P in H^(+), already <=
        Vec a(d, 0);
        a[i] = -1;
        push(std::move(a), 0, "H2 (-xi = 0" + suffix);

        a.assign(d, 0);
        a[i] = -(spec.d - 4);
        for (std::size_t j = 1; j + 1 < d; ++j)
            if (j != i) a[j] = 1;
        a[d - 1] = -1;
        push(std::move(a), 1, "H3 (-(d-4)xi + sum_j xj - xd = 1" + suffix);

        a.assign(d, 0);
        a[0] = 4;
        a[i] = -4;
        a[d - 1] = -1;
        push(std::move(a), 0, "H4 (4x1 - 4xi - xd = 0" + suffix);

        a.assign(d, 0);
        a[0] = -4;
        a[i] = -1;
        a[d - 1] = 1;
        push(std::move(a), 1, "H5 (-4x1 - xi + xd = 1" + suffix);

        a.assign(d, 0);
        a[0] = 1;
        a[i] = -(spec.d - 3);
        for (std::size_t j = 1; j + 1 < d; ++j)
            if (j != i) a[j] = 1;
        push(std::move(a), 1, "H6 (x1 - (d-3)xi + sum_j xj = 1" + suffix);

        a.assign(d, 0);
        a[0] = 5 * h - 5;
        a[i] = -((spec.d - 3) * (5 * h - 1) - 4);
        for (std::size_t j = 1; j + 1 < d; ++j)
            if (j != i) a[j] = 5 * h - 1;
        a[d - 1] = 1;
        push(std::move(a), 5 * h, "H7 ((5h-5)x1 - ((d-3)(5h-1)-4)xi + (5h-1)sum_j xj + xd = 5h" + suffix);

        a.assign(d, 0);
        a[0] = h - 5;
        a[i] = -(spec.d - 3) * (h - 1);
        for (std::size_t j = 1; j + 1 < d; ++j)
            if (j != i) a[j] = h - 1;
        a[d - 1] = 1;
        push(std::move(a), h, "H8 ((h-5)x1 - (d-3)(h-1)xi + (h-1)sum_j xj + xd = h" + suffix);

        a.assign(d, 0);
        a[0] = h - 1;
        a[i] = -((spec.d - 3) * h - 1);
        for (std::size_t j = 1; j + 1 < d; ++j)
            if (j != i) a[j] = h;
        push(std::move(a), h, "H9 ((h-1)x1 - ((d-3)h-1)xi + h sum_j xj = h" + suffix);
    }

    // canonical set: dedupe collapsed families (h = 1 collapses H8 across i),
    // merging labels so the audit trail survives
    std::sort(out.begin(), out.end());
    std::vector<Halfspace> dedup;
    for (Halfspace& hs : out) {
        if (!dedup.empty() && dedup.back() == hs) {
            dedup.back().label += " == " + hs.label;
            continue;
        }
        dedup.push_back(std::move(hs));
    }
    HRep rep;
    rep.ambient_dim = d;
    rep.halfspaces = std::move(dedup);
    return rep;
}

LatticePolytope build_ogata_p2() {
    std::vector<Vec> pts = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 2},
                            {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 3}};
    return LatticePolytope(4, std::move(pts));
}

LatticePolytope build_qk(Int k) {
    if (k < 1) throw invalid_input("build_qk: requires k >= 1");
    std::vector<Vec> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},     {0, 0, 1},
                            {1, 0, 1}, {0, 1, 1}, {1, 1, k},     {1, 1, k + 1}};
    return LatticePolytope(3, std::move(pts));
}

IntMatrix build_f0_configuration(const PhdSpec& spec) {
    spec.validate();
    std::size_t d = static_cast<std::size_t>(spec.d);
    Int h = spec.h;
    Vec ones = middle_ones(d);
    Vec ed = unit(d, d - 1);
    Vec e1 = unit(d, 0);

    std::vector<Vec> cols;
    for (std::size_t i = 1; i + 1 < d; ++i) {
        cols.push_back(vec_add(e1, unit(d, i)));
        cols.push_back(vec_add(e1, vec_add(unit(d, i), ed)));
    }
    for (Int j = 0; j < h; ++j)  // u_{3,j} = (j+1) ones + j ed
        cols.push_back(vec_add(e1, vec_add(vec_scale(j + 1, ones), vec_scale(j, ed))));
    for (Int j = 0; j < h; ++j)  // u_{2,j} = j ones + (j+1) ed
        cols.push_back(vec_add(e1, vec_add(vec_scale(j, ones), vec_scale(j + 1, ed))));
    for (Int j = 0; j <= h; ++j)  // u_{1,j} = j (ones + ed)
        cols.push_back(vec_add(e1, vec_scale(j, vec_add(ones, ed))));
    return IntMatrix::from_columns(cols);
}

std::vector<Vec> expected_holes(const PhdSpec& spec) {
    spec.validate();
    std::size_t d = static_cast<std::size_t>(spec.d);
    Vec ones = middle_ones(d);
    Vec ed = unit(d, d - 1);
    Vec e1 = unit(d, 0);
    std::vector<Vec> out;
    for (Int j = 1; j <= spec.h; ++j) {
        Vec u = vec_add(e1, vec_add(vec_scale(j, ones), vec_scale(j + 2, ed)));
        u.push_back(2);
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace polyhole
