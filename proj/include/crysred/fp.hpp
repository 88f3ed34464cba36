#pragma once

#include "crysred/ints.hpp"
#include "crysred/errors.hpp"
#include "crysred/valuation.hpp"

namespace crysred {

// Residue field element, residues 0..p-1.
class FpElem {
public:
    FpElem(long p, long v) : p_(p), v_(((v % p) + p) % p) {
        if (p_ < 3) throw DomainError("FpElem: p must be an odd prime > 2");
    }

    long prime() const { return p_; }
    long value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool same_ring(const FpElem& o) const { return p_ == o.p_; }

    ExtValuation val_pi() const {
        return v_ == 0 ? ExtValuation::infinity() : ExtValuation::finite(Rat(0));
    }

    FpElem operator+(const FpElem& o) const { check(o); return FpElem(p_, v_ + o.v_); }
    FpElem operator-(const FpElem& o) const { check(o); return FpElem(p_, v_ - o.v_ + p_); }
    FpElem operator*(const FpElem& o) const { check(o); return FpElem(p_, v_ * o.v_); }
    FpElem operator-() const { return FpElem(p_, p_ - v_); }

    FpElem inverse() const {
        if (v_ == 0) throw NonUnitError("FpElem: zero has no inverse");
        return FpElem(p_, static_cast<long>(mod_inverse(Int(v_), Int(p_))));
    }

    FpElem zero_like() const { return FpElem(p_, 0); }
    FpElem from_int_like(const Int& n) const {
        return FpElem(p_, static_cast<long>(mod_reduce(n, Int(p_))));
    }

    friend bool operator==(const FpElem& a, const FpElem& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }

private:
    void check(const FpElem& o) const {
        if (p_ != o.p_) throw RingMismatch("FpElem: prime mismatch");
    }
    long p_;
    long v_;
};

} // namespace crysred
