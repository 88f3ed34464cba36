#include "crysred/ramified.hpp"

#include <algorithm>

namespace crysred {

RamifiedElement::RamifiedElement(long p, int e, int P, std::vector<Int> coeffs)
    : p_(p), e_(e), P_(P), c_(std::move(coeffs)) {
    if (p_ < 3) throw DomainError("RamifiedElement: p must be an odd prime > 2");
    if (e_ < 1) throw DomainError("RamifiedElement: ramification index must be >= 1");
    if (P_ < 1) throw DomainError("RamifiedElement: precision must be >= 1");
    c_.resize(static_cast<size_t>(e_), Int(0));
    reduce();
}

int RamifiedElement::coeff_precision(int i) const {
    if (P_ <= i) return 0;
    return (P_ - i + e_ - 1) / e_;
}

void RamifiedElement::reduce() {
    for (int i = 0; i < e_; ++i) {
        int Ni = coeff_precision(i);
        if (Ni == 0) { c_[i] = 0; continue; }
        c_[i] = mod_reduce(c_[i], pow_int(p_, Ni));
    }
}

bool RamifiedElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

long long RamifiedElement::val_pi_lower() const {
    long long best = P_;
    for (int i = 0; i < e_; ++i) {
        if (c_[i] == 0) continue;
        best = std::min(best, static_cast<long long>(e_) * vp_int(c_[i], p_) + i);
    }
    return best;
}

ExtValuation RamifiedElement::val_pi() const {
    if (is_zero()) return ExtValuation::at_least(Rat(P_, e_));
    return ExtValuation::finite(Rat(val_pi_lower(), e_));
}

RamifiedElement RamifiedElement::operator+(const RamifiedElement& o) const {
    if (!same_ring(o)) throw RingMismatch("RamifiedElement: (p, e) mismatch");
    std::vector<Int> c(static_cast<size_t>(e_));
    for (int i = 0; i < e_; ++i) c[i] = c_[i] + o.c_[i];
    return RamifiedElement(p_, e_, std::min(P_, o.P_), std::move(c));
}

RamifiedElement RamifiedElement::operator-(const RamifiedElement& o) const {
    if (!same_ring(o)) throw RingMismatch("RamifiedElement: (p, e) mismatch");
    std::vector<Int> c(static_cast<size_t>(e_));
    for (int i = 0; i < e_; ++i) c[i] = c_[i] - o.c_[i];
    return RamifiedElement(p_, e_, std::min(P_, o.P_), std::move(c));
}

RamifiedElement RamifiedElement::operator*(const RamifiedElement& o) const {
    if (!same_ring(o)) throw RingMismatch("RamifiedElement: (p, e) mismatch");
    std::vector<Int> conv(static_cast<size_t>(2 * e_ - 1), Int(0));
    for (int i = 0; i < e_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < e_; ++j) conv[i + j] += c_[i] * o.c_[j];
    }
    // carry rule: pi^e = p
    std::vector<Int> c(static_cast<size_t>(e_), Int(0));
    for (int k = 2 * e_ - 2; k >= 0; --k) {
        if (k >= e_) conv[k - e_] += p_ * conv[k];
        else c[k] = conv[k];
    }
    long long vx = val_pi_lower(), vy = o.val_pi_lower();
    long long Pout = std::min<long long>(
        std::min<long long>(P_, o.P_),
        std::min<long long>(P_ + vy, o.P_ + vx));
    return RamifiedElement(p_, e_, static_cast<int>(std::max<long long>(Pout, 1)), std::move(c));
}

RamifiedElement RamifiedElement::operator-() const {
    std::vector<Int> c(static_cast<size_t>(e_));
    for (int i = 0; i < e_; ++i) c[i] = -c_[i];
    return RamifiedElement(p_, e_, P_, std::move(c));
}

RamifiedElement RamifiedElement::scaled(const Int& n) const {
    std::vector<Int> c(static_cast<size_t>(e_));
    for (int i = 0; i < e_; ++i) c[i] = c_[i] * n;
    return RamifiedElement(p_, e_, P_, std::move(c));
}

RamifiedElement RamifiedElement::mul_pi(int k) const {
    if (k < 0) return div_pi(-k);
    std::vector<Int> c(static_cast<size_t>(e_), Int(0));
    for (int i = 0; i < e_; ++i) {
        int pos = i + k;
        int q = pos / e_, s = pos % e_;
        c[s] += c_[i] * pow_int(p_, q);
    }
    return RamifiedElement(p_, e_, P_ + k, std::move(c));
}

RamifiedElement RamifiedElement::div_pi(int k) const {
    if (k < 0) return mul_pi(-k);
    RamifiedElement r = *this;
    for (int step = 0; step < k; ++step) {
        if (r.P_ <= 1) throw PrecisionError("div_pi: precision exhausted");
        std::vector<Int> c(static_cast<size_t>(e_), Int(0));
        if (r.c_[0] % p_ != 0)
            throw PrecisionError("div_pi: element not divisible by pi");
        for (int i = 0; i + 1 < e_; ++i) c[i] = r.c_[i + 1];
        c[e_ - 1] = r.c_[0] / p_;
        r = RamifiedElement(p_, e_, r.P_ - 1, std::move(c));
    }
    return r;
}

RamifiedElement RamifiedElement::invert_unit() const {
    ExtValuation v = val_pi();
    if (!v.exact()) throw PrecisionError("invert_unit: valuation undetermined");
    if (v.is_infinite() || v.value() > Rat(0)) throw NonUnitError("invert_unit: not a unit");
    long r0 = static_cast<long>(mod_reduce(c_[0], Int(p_)));
    RamifiedElement z = from_int_like(mod_inverse(Int(r0), Int(p_)));
    RamifiedElement two = from_int_like(2);
    int iters = 2;
    while ((1 << iters) < P_ + 2) ++iters;
    for (int i = 0; i <= iters; ++i) z = z * (two - *this * z);
    return z;
}

long RamifiedElement::residue() const {
    if (is_zero()) return 0;
    Rat v = Rat(val_pi_lower(), e_);
    if (v > Rat(0)) return 0;
    return static_cast<long>(mod_reduce(c_[0], Int(p_)));
}

RamifiedElement RamifiedElement::zero_like() const {
    return RamifiedElement(p_, e_, P_, std::vector<Int>(static_cast<size_t>(e_), Int(0)));
}

RamifiedElement RamifiedElement::from_int_like(const Int& n) const {
    std::vector<Int> c(static_cast<size_t>(e_), Int(0));
    c[0] = n;
    return RamifiedElement(p_, e_, P_, std::move(c));
}

RamifiedElement ram_div(const RamifiedElement& num, const RamifiedElement& den) {
    ExtValuation vd = den.val_pi();
    if (!vd.exact() || vd.is_infinite())
        throw PrecisionError("ram_div: denominator valuation undetermined");
    int s = static_cast<int>(vd.value().num * den.ram_index() / vd.value().den);
    RamifiedElement unit = den.div_pi(s);
    return num.div_pi(s) * unit.invert_unit();
}

RamifiedElement RamifiedElement::truncated(int P) const {
    if (P >= P_) return *this;
    return RamifiedElement(p_, e_, P, c_);
}

} // namespace crysred
