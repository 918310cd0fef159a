#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "polyhole/families.hpp"
#include "polyhole/lattice.hpp"
#include "polyhole/normal_forms.hpp"

using namespace polyhole;

namespace {

// Oracle: rank by rational row reduction (long double is fine at these sizes
// only as a cross-check; the fraction-free path is the implementation).
// To stay exact we reduce over rationals encoded as (num, den) pairs.
std::size_t rank_oracle(const IntMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::pair<Int, Int>>> a(rows, std::vector<std::pair<Int, Int>>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = {m.at(i, j), 1};
    auto norm = [](std::pair<Int, Int>& q) {
        if (q.second < 0) {
            q.first = -q.first;
            q.second = -q.second;
        }
        Int g = gcd_int(q.first, q.second);
        if (g > 1) {
            q.first /= g;
            q.second /= g;
        }
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].first == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].first == 0) continue;
            // row_i -= (a_ic / a_rc) * row_r
            std::pair<Int, Int> f = {checked_mul(a[i][c].first, a[r][c].second),
                                     checked_mul(a[i][c].second, a[r][c].first)};
            norm(f);
            for (std::size_t j = 0; j < cols; ++j) {
                std::pair<Int, Int> t = {checked_mul(f.first, a[r][j].first),
                                         checked_mul(f.second, a[r][j].second)};
                norm(t);
                std::pair<Int, Int> res = {
                    checked_sub(checked_mul(a[i][j].first, t.second), checked_mul(t.first, a[i][j].second)),
                    checked_mul(a[i][j].second, t.second)};
                norm(res);
                a[i][j] = res;
            }
        }
        ++r;
    }
    return r;
}

// Oracle: elementary divisors via gcds of k x k minors, d_k = D_k / D_{k-1}.
std::vector<Int> divisors_by_minors(const IntMatrix& m) {
    std::size_t n = std::min(m.rows(), m.cols());
    std::vector<Int> dk;
    Int prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Int g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        std::iota(ri.begin(), ri.end(), 0);
        for (;;) {
            std::iota(ci.begin(), ci.end(), 0);
            for (;;) {
                IntMatrix sub(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[a], ci[b]);
                g = gcd_int(g, sub.determinant());
                std::size_t t = k;
                while (t > 0 && ci[t - 1] == m.cols() - k + t - 1) --t;
                if (t == 0) break;
                ++ci[t - 1];
                for (std::size_t s = t; s < k; ++s) ci[s] = ci[s - 1] + 1;
            }
            std::size_t t = k;
            while (t > 0 && ri[t - 1] == m.rows() - k + t - 1) --t;
            if (t == 0) break;
            ++ri[t - 1];
            for (std::size_t s = t; s < k; ++s) ri[s] = ri[s - 1] + 1;
        }
        if (g == 0) break;
        dk.push_back(g / prev);
        prev = g;
    }
    return dk;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Int lo, Int hi) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<Int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        u.add_row_multiple(i, j, coef(rng));
    }
    return u;
}

IntMatrix homogenized_generators(const LatticePolytope& p) {
    std::vector<Vec> cols;
    for (const Vec& pt : p.lattice_points(1)) {
        Vec c = pt;
        c.push_back(1);
        cols.push_back(c);
    }
    return IntMatrix::from_columns(cols);
}

}  // namespace

TEST_CASE("hermite normal form: identity") {
    IntMatrix id = IntMatrix::identity(3);
    HermiteForm f = hermite_normal_form(id);
    CHECK(f.H == id);
    CHECK(f.U == id);
    CHECK(f.rank == 3);
}

TEST_CASE("hermite normal form: transform identity and rank") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 120; ++t) {
        IntMatrix m = random_matrix(rng, 2 + t % 4, 2 + (t / 2) % 5, -6, 6);
        HermiteForm f = hermite_normal_form(m);
        CHECK(m * f.U == f.H);
        CHECK(f.U.is_unimodular());
        CHECK(f.rank == rank_oracle(m));
        // echelon shape: strictly increasing pivot rows, zero above pivots
        for (std::size_t j = 0; j < f.rank; ++j) {
            std::size_t p = f.pivot_rows[j];
            CHECK(f.H.at(p, j) > 0);
            for (std::size_t i = 0; i < p; ++i) CHECK(f.H.at(i, j) == 0);
            for (std::size_t q = j + 1; q < f.H.cols(); ++q) CHECK(f.H.at(p, q) == 0);
            for (std::size_t q = 0; q < j; ++q) {
                CHECK(f.H.at(p, q) >= 0);
                CHECK(f.H.at(p, q) < f.H.at(p, j));
            }
        }
        for (std::size_t j = f.rank; j < f.H.cols(); ++j) CHECK(is_zero(f.H.column(j)));
    }
}

TEST_CASE("hermite normal form: P_{1,3} homogenized generator rank is 4") {
    IntMatrix m = homogenized_generators(build_phd({1, 3}));
    CHECK(m.cols() == 8);
    CHECK(hermite_normal_form(m).rank == 4);
    CHECK(rank_oracle(m) == 4);
}

TEST_CASE("hermite normal form: zero column input") {
    IntMatrix m(3, 3);
    m.at(0, 1) = 2;
    m.at(1, 1) = 1;
    m.at(2, 2) = 5;
    HermiteForm f = hermite_normal_form(m);
    CHECK(f.rank == 2);
    CHECK(m * f.U == f.H);
}

TEST_CASE("smith normal form: diag(2,3) -> divisors (1,6)") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    SmithForm f = smith_normal_form(m);
    CHECK(f.elementary_divisors == std::vector<Int>{1, 6});
    CHECK(f.U * m * f.V == f.S);
}

TEST_CASE("smith normal form: lattice of P_{1,3} and P_{2,4} is full") {
    for (PhdSpec spec : {PhdSpec{1, 3}, PhdSpec{2, 4}}) {
        IntMatrix m = homogenized_generators(build_phd(spec));
        SmithForm f = smith_normal_form(m);
        CHECK(f.elementary_divisors == std::vector<Int>(spec.d + 1, 1));
        CHECK(f.U * m * f.V == f.S);
        CHECK(f.elementary_divisors == divisors_by_minors(m));
    }
}

TEST_CASE("smith normal form: transform identities and minor-gcd oracle") {
    std::mt19937_64 rng(987);
    for (int t = 0; t < 100; ++t) {
        IntMatrix m = random_matrix(rng, 2 + t % 3, 2 + (t / 3) % 3, -5, 5);
        SmithForm f = smith_normal_form(m);
        CHECK(f.U * m * f.V == f.S);
        CHECK(f.U.is_unimodular());
        CHECK(f.V.is_unimodular());
        for (std::size_t i = 1; i < f.elementary_divisors.size(); ++i)
            CHECK(f.elementary_divisors[i] % f.elementary_divisors[i - 1] == 0);
        CHECK(f.elementary_divisors == divisors_by_minors(m));
    }
}

TEST_CASE("smith divisors invariant under unimodular transforms") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 60; ++t) {
        IntMatrix m = random_matrix(rng, 3, 4, -4, 4);
        auto base = smith_normal_form(m).elementary_divisors;
        IntMatrix l = random_unimodular(rng, 3, 6);
        IntMatrix r = random_unimodular(rng, 4, 6);
        CHECK(smith_normal_form(l * m * r).elementary_divisors == base);
    }
}

TEST_CASE("kernel basis solves M x = 0 and is saturated") {
    std::mt19937_64 rng(321);
    for (int t = 0; t < 60; ++t) {
        IntMatrix m = random_matrix(rng, 2, 4, -3, 3);
        auto ker = kernel_basis(m);
        CHECK(ker.size() == 4 - rank_oracle(m));
        for (const Vec& v : ker)
            for (std::size_t i = 0; i < m.rows(); ++i) CHECK(checked_dot(m.row(i), v) == 0);
        if (!ker.empty()) {
            auto divs = smith_normal_form(IntMatrix::from_columns(ker)).elementary_divisors;
            for (Int d : divs) CHECK(d == 1);  // saturated
        }
    }
}

TEST_CASE("sublattice coordinates: segment {(0,0),(2,0)}") {
    SublatticeCoords sc = sublattice_coordinates({{0, 0}, {2, 0}});
    CHECK(sc.dim == 1);
    CHECK(sc.basis.at(0, 0) == 1);  // saturation contains (1,0)
    CHECK(sc.basis.at(1, 0) == 0);
    CHECK(sc.coords == std::vector<Vec>{{0}, {2}});
}

TEST_CASE("sublattice coordinates: single point") {
    SublatticeCoords sc = sublattice_coordinates({{3, -1, 2}});
    CHECK(sc.dim == 0);
    CHECK(sc.coords == std::vector<Vec>{{}});
}

TEST_CASE("sublattice coordinates: F_0 of P_{1,3} is a unit square") {
    LatticePolytope p = build_phd({1, 3});
    std::vector<Vec> f0;
    for (const Vec& pt : p.lattice_points(1))
        if (pt[0] == 0) f0.push_back(pt);
    SublatticeCoords sc = sublattice_coordinates(f0);
    CHECK(sc.dim == 2);
    std::vector<Vec> sorted = sc.coords;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Vec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("sublattice coordinates: exact round-trip (property)") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<Int> dist(-5, 5);
    for (int t = 0; t < 120; ++t) {
        std::size_t n = 2 + t % 3, count = 1 + t % 5;
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < count; ++i) {
            Vec p(n);
            for (auto& x : p) x = dist(rng);
            pts.push_back(p);
        }
        SublatticeCoords sc = sublattice_coordinates(pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Vec rec = sc.origin;
            for (std::size_t j = 0; j < sc.dim; ++j)
                for (std::size_t r = 0; r < n; ++r)
                    rec[r] = checked_add(rec[r], checked_mul(sc.basis.at(r, j), sc.coords[i][j]));
            CHECK(rec == pts[i]);
        }
    }
}

TEST_CASE("unimodular simplex: unit simplices") {
    CHECK(is_unimodular_simplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(is_unimodular_simplex({{0, 0}, {1, 0}, {0, 1}}));
    CHECK_FALSE(is_unimodular_simplex({{0, 0}, {1, 0}, {2, 0}}));          // degenerate
    CHECK_FALSE(is_unimodular_simplex({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));  // not a simplex
}

TEST_CASE("unimodular simplex: stretched simplex {0,e_1,...,e_{d-2},(h-1)e_{d-1}} with h=3") {
    std::size_t d = 4;
    std::vector<Vec> pts;
    pts.push_back(Vec(d, 0));
    for (std::size_t i = 0; i + 2 < d + 1; ++i) {
        Vec e(d, 0);
        e[i] = 1;
        pts.push_back(e);
    }
    Vec last(d, 0);
    last[d - 1] = 2;  // (h-1) e_{d-1}, h = 3
    pts.push_back(last);
    CHECK_FALSE(is_unimodular_simplex(pts));
    last[d - 1] = 1;  // h = 2 gives the unit simplex
    pts.back() = last;
    CHECK(is_unimodular_simplex(pts));
}

TEST_CASE("unimodular simplex: invariance under permutation/translation/unimodular maps") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<Int> dist(-3, 3);
    for (int t = 0; t < 80; ++t) {
        std::size_t n = 3;
        std::vector<Vec> pts;
        for (int i = 0; i < 4; ++i) {
            Vec p(n);
            for (auto& x : p) x = dist(rng);
            pts.push_back(p);
        }
        bool base = is_unimodular_simplex(pts);
        std::shuffle(pts.begin(), pts.end(), rng);
        Vec shift = {dist(rng), dist(rng), dist(rng)};
        IntMatrix u = random_unimodular(rng, n, 5);
        std::vector<Vec> mapped;
        for (const Vec& p : pts) {
            Vec q(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    q[i] = checked_add(q[i], checked_mul(u.at(i, j), p[j]));
            mapped.push_back(vec_add(q, shift));
        }
        CHECK(is_unimodular_simplex(mapped) == base);
    }
}

TEST_CASE("totally unimodular: identity and basic counterexample") {
    CHECK(is_totally_unimodular(IntMatrix::identity(4)));
    IntMatrix bad(2, 2);
    bad.at(0, 0) = 1;
    bad.at(0, 1) = 1;
    bad.at(1, 0) = -1;
    bad.at(1, 1) = 1;
    CHECK_FALSE(is_totally_unimodular(bad));  // det 2
    IntMatrix big(1, 1);
    big.at(0, 0) = 2;
    CHECK_FALSE(is_totally_unimodular(big));  // entry outside {-1,0,1}
}

TEST_CASE("totally unimodular: Lemma 3 column matrix for F_{2,2}, d=4") {
    // columns: 0, -e_d, e_1, e_1-e_d, e_3..e_{d-1}, e_3-e_d..e_{d-1}-e_d
    std::size_t d = 4;
    std::vector<Vec> cols;
    cols.push_back(Vec(d, 0));
    Vec med(d, 0);
    med[d - 1] = -1;
    cols.push_back(med);
    Vec e1(d, 0);
    e1[0] = 1;
    cols.push_back(e1);
    cols.push_back(vec_add(e1, med));
    for (std::size_t i = 2; i + 1 < d; ++i) {
        Vec ei(d, 0);
        ei[i] = 1;
        cols.push_back(ei);
    }
    for (std::size_t i = 2; i + 1 < d; ++i) {
        Vec ei(d, 0);
        ei[i] = 1;
        cols.push_back(vec_add(ei, med));
    }
    CHECK(is_totally_unimodular(IntMatrix::from_columns(cols)));
}

TEST_CASE("totally unimodular: budget guard") {
    IntMatrix big(14, 14);
    CHECK_THROWS_AS(is_totally_unimodular(big, 1000), budget_exceeded);
}

TEST_CASE("checked arithmetic overflows loudly") {
    Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, 1), overflow_exception);
    CHECK_THROWS_AS(checked_mul(big, 2), overflow_exception);
    CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), overflow_exception);
    CHECK(checked_add(2, 3) == 5);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(7, -2) == -4);
}
