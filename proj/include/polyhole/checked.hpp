#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "polyhole/errors.hpp"

namespace polyhole {

// All coordinates, normals and coefficients are 64-bit integers.
// Every arithmetic path goes through the checked helpers below; on overflow
// they throw instead of wrapping.
using Int = std::int64_t;
using Vec = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_exception("int64 overflow: add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_exception("int64 overflow: sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_exception("int64 overflow: mul");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw invalid_input("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = checked_neg(a);
    if (b < 0) b = checked_neg(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// gcd of |entries|; 0 for the zero vector
inline Int content(const Vec& v) {
    Int g = 0;
    for (Int x : v) g = gcd_int(g, x);
    return g;
}

// divide by the content (no-op on the zero vector)
inline void make_primitive(Vec& v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
}

inline Int floor_div(Int a, Int b) {
    if (b == 0) throw invalid_input("floor_div by zero");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) {
    if (b == 0) throw invalid_input("ceil_div by zero");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw invalid_input("vec_add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw invalid_input("vec_sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline Vec vec_scale(Int c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
    return r;
}

inline bool is_zero(const Vec& v) {
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

struct VecHash {
    std::size_t operator()(const Vec& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace polyhole
