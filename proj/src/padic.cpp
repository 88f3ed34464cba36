#include "crysred/padic.hpp"

namespace crysred {

ExtValuation val_int(const Int& n, long p) {
    if (n == 0) return ExtValuation::infinity();
    return ExtValuation::finite(Rat(vp_int(n, p)));
}

Int teichmuller_int(long lambda, long p, int N) {
    Int m = pow_int(p, N);
    Int x = mod_reduce(Int(lambda), m);
    for (int i = 0; i <= N + 1; ++i) {
        Int y = powm(x, Int(p), m);
        if (y == x) break;
        x = y;
    }
    return x;
}

PadicInt::PadicInt(long p, int N, Int value) : p_(p), N_(N), value_(std::move(value)) {
    if (p_ < 3) throw DomainError("PadicInt: p must be an odd prime > 2");
    if (N_ < 1) throw DomainError("PadicInt: precision must be >= 1");
    value_ = mod_reduce(value_, pow_int(p_, N_));
}

ExtValuation PadicInt::val() const {
    if (value_ == 0) return ExtValuation::at_least(Rat(N_));
    return ExtValuation::finite(Rat(vp_int(value_, p_)));
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    if (p_ != o.p_) throw RingMismatch("PadicInt: prime mismatch");
    return PadicInt(p_, std::min(N_, o.N_), value_ + o.value_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    if (p_ != o.p_) throw RingMismatch("PadicInt: prime mismatch");
    return PadicInt(p_, std::min(N_, o.N_), value_ - o.value_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    if (p_ != o.p_) throw RingMismatch("PadicInt: prime mismatch");
    return PadicInt(p_, std::min(N_, o.N_), value_ * o.value_);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, N_, -value_); }

PadicInt PadicInt::inverse() const {
    if (value_ % p_ == 0) throw NonUnitError("PadicInt: not a unit");
    return PadicInt(p_, N_, mod_inverse(value_, pow_int(p_, N_)));
}

PadicInt teichmuller(long lambda, long p, int N) {
    return PadicInt(p, N, teichmuller_int(lambda, p, N));
}

} // namespace crysred
