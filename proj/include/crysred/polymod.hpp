#pragma once

#include <vector>

#include "crysred/fp.hpp"
#include "crysred/ints.hpp"
#include "crysred/errors.hpp"

namespace crysred {

// Homogeneous degree-r polynomial in x, y; coefficient i multiplies x^{r-i} y^i.
template <class R>
class HomogPoly {
public:
    HomogPoly(int degree, std::vector<R> coeffs) : deg_(degree), c_(std::move(coeffs)) {
        if (deg_ < 0) throw DomainError("HomogPoly: negative degree");
        if (c_.size() != static_cast<size_t>(deg_) + 1)
            throw DomainError("HomogPoly: need exactly degree+1 coefficients");
        for (const R& x : c_)
            if (!x.same_ring(c_.front())) throw RingMismatch("HomogPoly: mixed rings");
    }

    static HomogPoly zero(int degree, const R& proto) {
        return HomogPoly(degree, std::vector<R>(static_cast<size_t>(degree) + 1, proto.zero_like()));
    }

    // coef * x^{r-i} y^i
    static HomogPoly monomial(int degree, int i, const R& coef) {
        HomogPoly f = zero(degree, coef);
        f.c_[static_cast<size_t>(i)] = coef;
        return f;
    }

    int degree() const { return deg_; }
    const R& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& proto() const { return c_.front(); }

    bool is_zero() const {
        for (const R& x : c_) if (!x.is_zero()) return false;
        return true;
    }

    HomogPoly operator+(const HomogPoly& o) const {
        require_same(o);
        std::vector<R> c; c.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] + o.c_[i]);
        return HomogPoly(deg_, std::move(c));
    }
    HomogPoly operator-(const HomogPoly& o) const {
        require_same(o);
        std::vector<R> c; c.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] - o.c_[i]);
        return HomogPoly(deg_, std::move(c));
    }
    HomogPoly operator-() const {
        std::vector<R> c; c.reserve(c_.size());
        for (const R& x : c_) c.push_back(-x);
        return HomogPoly(deg_, std::move(c));
    }
    HomogPoly scaled(const R& s) const {
        std::vector<R> c; c.reserve(c_.size());
        for (const R& x : c_) c.push_back(x * s);
        return HomogPoly(deg_, std::move(c));
    }

    // product, degrees add
    HomogPoly operator*(const HomogPoly& o) const {
        if (!proto().same_ring(o.proto())) throw RingMismatch("HomogPoly: ring mismatch");
        HomogPoly out = zero(deg_ + o.deg_, proto());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
        }
        return out;
    }

    HomogPoly pow(int n) const {
        HomogPoly acc = monomial(0, 0, proto().from_int_like(1));
        for (int i = 0; i < n; ++i) acc = acc * (*this);
        return acc;
    }

private:
    void require_same(const HomogPoly& o) const {
        if (deg_ != o.deg_ || !proto().same_ring(o.proto()))
            throw RingMismatch("HomogPoly: degree/ring mismatch");
    }

    int deg_;
    std::vector<R> c_;
};

// f(u, w) for linear forms u, w; generalizes the matrix action to
// non-invertible substitutions like (px, y).
template <class R>
HomogPoly<R> substitute_pair(const HomogPoly<R>& f, const HomogPoly<R>& u, const HomogPoly<R>& w) {
    if (u.degree() != 1 || w.degree() != 1)
        throw DomainError("substitute_pair: substituents must be linear forms");
    int r = f.degree();
    // power tables, U[j] = u^j
    std::vector<HomogPoly<R>> U, W;
    U.reserve(r + 1); W.reserve(r + 1);
    U.push_back(HomogPoly<R>::monomial(0, 0, f.proto().from_int_like(1)));
    W.push_back(U.front());
    for (int j = 1; j <= r; ++j) {
        U.push_back(U.back() * u);
        W.push_back(W.back() * w);
    }
    HomogPoly<R> out = HomogPoly<R>::zero(r, f.proto());
    for (int i = 0; i <= r; ++i) {
        if (f.coeff(i).is_zero()) continue;
        out = out + (U[r - i] * W[i]).scaled(f.coeff(i));
    }
    return out;
}

// Substitution action of an integral 2x2 matrix (a b; c d):
// x^{r-i} y^i -> (ax+cy)^{r-i} (bx+dy)^i.
template <class R>
HomogPoly<R> act_entries(const Int& a, const Int& b, const Int& c, const Int& d,
                         const HomogPoly<R>& f) {
    const R& z = f.proto();
    std::vector<R> uc{z.from_int_like(a), z.from_int_like(c)};
    std::vector<R> wc{z.from_int_like(b), z.from_int_like(d)};
    return substitute_pair(f, HomogPoly<R>(1, std::move(uc)), HomogPoly<R>(1, std::move(wc)));
}

// The projection Symm^r -> det (x) Symm^{p-2} over F_p:
// Psi(f) = sum_{s,t in F_p} f(s,t) (tX - sY)^{p-2}.
inline HomogPoly<FpElem> psi(const HomogPoly<FpElem>& f) {
    long p = f.proto().prime();
    int r = f.degree();
    if (r < p || (r - 1) % (p - 1) != 0)
        throw HypothesisError("psi: requires r >= p and r = 1 mod p-1");
    FpElem zero(p, 0);
    HomogPoly<FpElem> out = HomogPoly<FpElem>::zero(static_cast<int>(p) - 2, zero);
    for (long s = 0; s < p; ++s) {
        for (long t = 0; t < p; ++t) {
            // f(s, t) by power tables
            long sp = 1, tp = 1;
            std::vector<long> spow(r + 1), tpow(r + 1);
            for (int j = 0; j <= r; ++j) { spow[j] = sp; tpow[j] = tp; sp = sp * s % p; tp = tp * t % p; }
            long fv = 0;
            for (int i = 0; i <= r; ++i)
                fv = (fv + f.coeff(i).value() * spow[r - i] % p * tpow[i]) % p;
            if (fv == 0) continue;
            std::vector<FpElem> lin{FpElem(p, t), FpElem(p, -s + p)};
            HomogPoly<FpElem> form = HomogPoly<FpElem>(1, std::move(lin)).pow(static_cast<int>(p) - 2);
            out = out + form.scaled(FpElem(p, fv));
        }
    }
    return out;
}

} // namespace crysred
