#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "crysred/errors.hpp"

namespace crysred {

// Small exact rational, denominators are ramification indices so stay tiny.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DomainError("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend auto operator<=>(const Rat& a, const Rat& b) {
        return a.num * b.den <=> b.num * a.den;
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

// A p-adic valuation: a rational (in p-units), +infinity, or a lower bound
// "at least s/e" when every digit visible at the working precision vanished.
class ExtValuation {
public:
    static ExtValuation infinity() {
        ExtValuation v;
        v.infinite_ = true;
        v.exact_ = true;
        return v;
    }
    static ExtValuation finite(Rat value, bool exact = true) {
        ExtValuation v;
        v.value_ = value;
        v.exact_ = exact;
        return v;
    }
    static ExtValuation at_least(Rat bound) { return finite(bound, false); }

    bool is_infinite() const { return infinite_; }
    bool exact() const { return exact_; }
    // finite value, or the lower bound in the inexact case
    const Rat& value() const {
        if (infinite_) throw DomainError("ExtValuation: infinite has no value");
        return value_;
    }

    ExtValuation operator+(const ExtValuation& o) const {
        if (infinite_ || o.infinite_) return infinity();
        return finite(value_ + o.value_, exact_ && o.exact_);
    }

    std::string str() const {
        if (infinite_) return "inf";
        if (exact_) return value_.str();
        return ">=" + value_.str();
    }

private:
    bool infinite_ = false;
    bool exact_ = true;
    Rat value_;
};

// Total-order comparison when the exactness flags allow a decision;
// throws PrecisionError otherwise.
inline std::strong_ordering compare_valuations(const ExtValuation& u, const ExtValuation& w) {
    if (u.exact() && w.exact()) {
        if (u.is_infinite() && w.is_infinite()) return std::strong_ordering::equal;
        if (u.is_infinite()) return std::strong_ordering::greater;
        if (w.is_infinite()) return std::strong_ordering::less;
        return u.value() <=> w.value();
    }
    if (u.exact() && !w.exact()) {
        // w is only known to be >= its bound
        if (!u.is_infinite() && u.value() < w.value()) return std::strong_ordering::less;
        throw PrecisionError("compare_valuations: bound " + w.str() + " cannot separate " + u.str());
    }
    if (!u.exact() && w.exact()) {
        if (!w.is_infinite() && w.value() < u.value()) return std::strong_ordering::greater;
        throw PrecisionError("compare_valuations: bound " + u.str() + " cannot separate " + w.str());
    }
    throw PrecisionError("compare_valuations: two inexact bounds");
}

// Decide "threshold <= v" for an exact finite threshold. An inexact v with
// bound >= threshold suffices for "true"; otherwise undecidable.
inline bool valuation_at_least(const ExtValuation& v, const Rat& threshold) {
    if (v.is_infinite()) return true;
    if (v.exact()) return threshold <= v.value();
    if (threshold <= v.value()) return true;
    throw PrecisionError("valuation_at_least: bound " + v.str() +
                         " below threshold " + threshold.str());
}

} // namespace crysred
