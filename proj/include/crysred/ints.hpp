#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

namespace crysred {

using Int = boost::multiprecision::cpp_int;

inline Int pow_int(long base, long exp) {
    Int r = 1, b = base;
    for (long i = 0; i < exp; ++i) r *= b;
    return r;
}

// exponent of p in n; n must be nonzero
inline long vp_int(Int n, long p) {
    if (n == 0) throw std::invalid_argument("vp_int: zero argument");
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

// inverse of a modulo m, gcd(a, m) = 1
inline Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_reduce(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: not a unit");
    return mod_reduce(old_s, m);
}

} // namespace crysred
