#pragma once

#include "crysred/ints.hpp"
#include "crysred/errors.hpp"
#include "crysred/polymod.hpp"

namespace crysred {

// 2x2 matrix over Q_p with exact integer entries and a power-of-p
// denominator: value = (a b; c d) / p^s.
struct Mat2 {
    long p;
    Int a, b, c, d;
    int s = 0;

    static Mat2 identity(long p) { return Mat2{p, 1, 0, 0, 1, 0}; }
    static Mat2 diag(long p, Int x, Int y) { return Mat2{p, std::move(x), 0, 0, std::move(y), 0}; }
    // (x y; 0 z)
    static Mat2 upper(long p, Int x, Int y, Int z) {
        return Mat2{p, std::move(x), std::move(y), 0, std::move(z), 0};
    }
    static Mat2 scalar(long p, Int x) { Int y = x; return diag(p, std::move(x), std::move(y)); }

    Mat2 operator*(const Mat2& o) const {
        if (p != o.p) throw RingMismatch("Mat2: prime mismatch");
        Mat2 r{p,
               a * o.a + b * o.c, a * o.b + b * o.d,
               c * o.a + d * o.c, c * o.b + d * o.d,
               s + o.s};
        r.strip();
        return r;
    }

    Int det_num() const { return a * d - b * c; }

    bool is_zero_matrix() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    // remove common p factors against the denominator
    void strip() {
        while (s > 0 && a % p == 0 && b % p == 0 && c % p == 0 && d % p == 0) {
            a /= p; b /= p; c /= p; d /= p; --s;
        }
    }

    // minimum p-valuation over nonzero entries
    long min_entry_val() const {
        long best = -1;
        for (const Int* e : {&a, &b, &c, &d}) {
            if (*e == 0) continue;
            long v = vp_int(*e, p);
            if (best < 0 || v < best) best = v;
        }
        if (best < 0) throw SingularMatrix("Mat2: zero matrix");
        return best;
    }
};

// Action of kappa in KZ on Symm^r: strip the central p-power (which acts
// trivially), then apply the integral substitution action. Throws if the
// remaining matrix is not in GL_2(Z_p).
template <class R>
HomogPoly<R> act_kz(const Mat2& kappa, const HomogPoly<R>& f) {
    long nu = kappa.min_entry_val();
    Int q = pow_int(kappa.p, nu);
    Int a = kappa.a / q, b = kappa.b / q, c = kappa.c / q, d = kappa.d / q;
    Int det = a * d - b * c;
    if (det == 0 || det % kappa.p == 0)
        throw DomainError("act_kz: matrix not in KZ");
    return act_entries(a, b, c, d, f);
}

} // namespace crysred
