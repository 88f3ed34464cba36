#pragma once

#include <vector>

#include "crysred/padic.hpp"

namespace crysred {

// Element of O = Z_p[pi]/(pi^e - p), truncated to absolute pi-adic
// precision P. Stored as coefficients c_0..c_{e-1} of powers of pi,
// with c_i known mod p^{ceil((P-i)/e)}.
class RamifiedElement {
public:
    RamifiedElement(long p, int e, int P, std::vector<Int> coeffs);

    long prime() const { return p_; }
    int ram_index() const { return e_; }
    int precision() const { return P_; }
    const std::vector<Int>& coeffs() const { return c_; }

    // precision of coefficient i, in p-units
    int coeff_precision(int i) const;

    bool is_zero() const;
    bool same_ring(const RamifiedElement& o) const {
        return p_ == o.p_ && e_ == o.e_;
    }

    // v(sum c_i pi^i) = min_i (v_p(c_i) + i/e); inexact bound >= P/e when
    // every visible digit vanishes
    ExtValuation val_pi() const;

    // lower bound on the valuation in pi-units (exact value when known)
    long long val_pi_lower() const;

    RamifiedElement operator+(const RamifiedElement& o) const;
    RamifiedElement operator-(const RamifiedElement& o) const;
    RamifiedElement operator*(const RamifiedElement& o) const;
    RamifiedElement operator-() const;

    RamifiedElement scaled(const Int& n) const;

    // multiply by pi^k (k >= 0)
    RamifiedElement mul_pi(int k) const;
    // exact division by pi^k; throws PrecisionError if a visible digit obstructs
    RamifiedElement div_pi(int k) const;

    // inverse of a unit (v = 0 exactly), by Newton iteration from the
    // residue inverse
    RamifiedElement invert_unit() const;

    // image in F_p; 0 when v > 0 decidably, c_0 mod p when v = 0
    long residue() const;

    RamifiedElement zero_like() const;
    RamifiedElement from_int_like(const Int& n) const;

    // drop absolute precision to P' (no-op if P' >= current)
    RamifiedElement truncated(int P) const;

private:
    void reduce();

    long p_;
    int e_;
    int P_;
    std::vector<Int> c_;
};

// num / den for den with exactly known valuation; requires the quotient to
// be integral (throws PrecisionError otherwise).
RamifiedElement ram_div(const RamifiedElement& num, const RamifiedElement& den);

// Construction helpers for a fixed (p, e, P).
struct RamRing {
    long p;
    int e;
    int P;

    RamifiedElement zero() const { return from_int(0); }
    RamifiedElement one() const { return from_int(1); }
    RamifiedElement from_int(const Int& n) const {
        std::vector<Int> c(static_cast<size_t>(e), Int(0));
        c[0] = n;
        return RamifiedElement(p, e, P, std::move(c));
    }
    RamifiedElement from_digits(const std::vector<Int>& digits) const {
        std::vector<Int> c(static_cast<size_t>(e), Int(0));
        for (size_t i = 0; i < digits.size() && i < c.size(); ++i) c[i] = digits[i];
        return RamifiedElement(p, e, P, std::move(c));
    }
    RamifiedElement pi_pow(int k) const { return one().mul_pi(k); }
    RamifiedElement pi() const { return pi_pow(1); }
};

} // namespace crysred
