#pragma once

#include "crysred/ints.hpp"
#include "crysred/errors.hpp"
#include "crysred/valuation.hpp"

namespace crysred {

// v_p(n) as an ExtValuation; +infinity (exact) for n = 0.
ExtValuation val_int(const Int& n, long p);

// Teichmueller lift of lambda in {0,..,p-1} as an integer mod p^N,
// computed by iterating x -> x^p to its fixed point.
Int teichmuller_int(long lambda, long p, int N);

// Truncated element of Z_p: a residue mod p^N with absolute precision N.
class PadicInt {
public:
    PadicInt(long p, int N, Int value);

    long prime() const { return p_; }
    int precision() const { return N_; }
    const Int& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }

    // valuation in p-units (e = 1); inexact bound >= N for a vanished value
    ExtValuation val() const;

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator-() const;

    PadicInt zero_like() const { return PadicInt(p_, N_, 0); }
    PadicInt from_int_like(const Int& n) const { return PadicInt(p_, N_, n); }
    bool same_ring(const PadicInt& o) const { return p_ == o.p_; }

    // valuation in pi-units of the ambient ring (e = 1 here)
    ExtValuation val_pi() const { return val(); }

    long residue() const { return static_cast<long>(value_ % p_); }

    PadicInt inverse() const;

private:
    long p_;
    int N_;
    Int value_; // 0 <= value_ < p^N
};

// Teichmueller lift as a PadicInt.
PadicInt teichmuller(long lambda, long p, int N);

} // namespace crysred
