#pragma once

#include "crysred/induction.hpp"

namespace crysred {

// The Hecke operator T on I(Symm^r R^2):
//   T[g,v] = sum_{lambda in F_p} [g (p,[lambda];0,1), v(x, -[lambda]x + py)]
//          + [g (1,0;0,p), v(px, y)].
template <class R>
InductionElement<R> apply_T(const InductionElement<R>& E, const CanonCtx& ctx) {
    const long p = ctx.p;
    InductionElement<R> out(E.proto());
    const R one = E.proto().proto().from_int_like(1);
    for (const auto& [rep, v] : E.terms()) {
        Mat2 g = rep_to_mat(rep, ctx);
        for (long lam = 0; lam < p; ++lam) {
            Int tl = teichmuller_int(lam, p, ctx.work_prec);
            Mat2 h = g * Mat2::upper(p, Int(p), tl, Int(1));
            // v(x, -[lambda] x + p y)
            HomogPoly<R> u(1, {one.from_int_like(1), one.from_int_like(0)});
            HomogPoly<R> w(1, {one.from_int_like(-tl), one.from_int_like(p)});
            out.insert_term(h, substitute_pair(v, u, w), ctx);
        }
        Mat2 h = g * Mat2::diag(p, Int(1), Int(p));
        HomogPoly<R> u(1, {one.from_int_like(p), one.from_int_like(0)});
        HomogPoly<R> w(1, {one.from_int_like(0), one.from_int_like(1)});
        out.insert_term(h, substitute_pair(v, u, w), ctx);
    }
    return out;
}

template <class R>
InductionElement<R> apply_T_minus_a(const InductionElement<R>& E, const R& a, const CanonCtx& ctx) {
    return apply_T(E, ctx) - E.scaled(a);
}

// Parameters of the section-4 computations over O = Z_p[pi]/(pi^e - p).
struct HeckeParams {
    long p;
    int r;
    RamRing ring;        // working ring for coefficients
    RamifiedElement a;   // 0 < v(a) < 1, exact

    long t = 0;          // v(r - 1)
    Rat v_a;             // v(a), p-units
    Rat t0;              // min{t + 1 + v(a), v(a^2 - rp)}
    Rat t1;              // t0 + min{v(a), 1 - v(a)}
    ExtValuation v_a2_rp = ExtValuation::infinity(); // v(a^2 - rp)

    HeckeParams(long p_, int r_, RamifiedElement a_)
        : p(p_), r(r_), ring{p_, a_.ram_index(), a_.precision()}, a(std::move(a_)) {
        if (p < 3) throw HypothesisError("HeckeParams: p must be an odd prime > 2");
        if (r <= p) throw HypothesisError("HeckeParams: r > p required");
        if ((r - 1) % (p - 1) != 0) throw HypothesisError("HeckeParams: r = 1 mod p-1 required");
        t = vp_int(Int(r) - 1, p);
        ExtValuation va = a.val_pi();
        if (!va.exact() || va.is_infinite())
            throw PrecisionError("HeckeParams: v(a) not exactly known");
        v_a = va.value();
        if (!(Rat(0) < v_a && v_a < Rat(1)))
            throw DomainError("HeckeParams: 0 < v(a) < 1 required");
        if (a.precision() < ring.e * (static_cast<int>(t) + 2))
            throw PrecisionError("HeckeParams: precision below e(t+2)");
        RamifiedElement a2rp = a * a - ring.from_int(Int(r) * p);
        v_a2_rp = a2rp.val_pi();
        Rat cand = Rat(t) + Rat(1) + v_a;
        if (v_a2_rp.is_infinite()) t0 = cand;
        else if (v_a2_rp.exact()) t0 = rat_min(cand, v_a2_rp.value());
        else if (cand <= v_a2_rp.value()) t0 = cand;
        else throw PrecisionError("HeckeParams: v(a^2 - rp) undetermined below t+1+v(a)");
        t1 = t0 + rat_min(v_a, Rat(1) - v_a);
    }

    CanonCtx canon() const {
        int pdigits = (ring.P + ring.e - 1) / ring.e;
        return CanonCtx{p, std::max(48, pdigits + 16)};
    }

    // pi-unit count of a p-unit rational with denominator dividing e
    int pi_units(const Rat& x) const {
        long long n = x.num * ring.e;
        if (n % x.den != 0) throw DomainError("pi_units: not representable");
        return static_cast<int>(n / x.den);
    }

    // y^r - x^{r-1} y, the generator the section-4 computations start from
    HomogPoly<RamifiedElement> generator_poly() const {
        auto f = HomogPoly<RamifiedElement>::monomial(r, r, ring.one());
        return f - HomogPoly<RamifiedElement>::monomial(r, 1, ring.one());
    }

    // smallest admissible upper index in phi_g: N > t0 / v(a)
    int default_phi_N() const {
        // ceil(t0 / v(a)) + 1
        long long num = t0.num * v_a.den, den = t0.den * v_a.num;
        long long q = (num + den - 1) / den;
        return static_cast<int>(q) + 1;
    }
};

// phi_g = sum_{j=0}^{N} [g (p^j,0;0,1), a^j (y^r - x^{r-1} y)]
inline InductionElement<RamifiedElement> build_phi_g(const HeckeParams& hp, const Mat2& g, int N) {
    // hypothesis N > t0 / v(a)
    if (Rat(N) * hp.v_a <= hp.t0)
        throw HypothesisError("build_phi_g: N too small (need N > t0/v(a))");
    CanonCtx ctx = hp.canon();
    InductionElement<RamifiedElement> out(HomogPoly<RamifiedElement>::zero(hp.r, hp.ring.zero()));
    HomogPoly<RamifiedElement> base = hp.generator_poly();
    RamifiedElement aj = hp.ring.one();
    for (int j = 0; j <= N; ++j) {
        Mat2 dg = g * Mat2::diag(hp.p, pow_int(hp.p, j), Int(1));
        out.insert_term(dg, base.scaled(aj), ctx);
        aj = aj * hp.a;
    }
    return out;
}

inline InductionElement<RamifiedElement> build_phi_g(const HeckeParams& hp, const Mat2& g) {
    return build_phi_g(hp, g, hp.default_phi_N());
}

// phi = -p phi_1 + sum_mu a phi_{(p,[mu];0,1)}
//       + [1, sum_mu ([mu]x + y)^r - rp x^{r-1} y]
inline InductionElement<RamifiedElement> build_phi(const HeckeParams& hp) {
    CanonCtx ctx = hp.canon();
    int N = hp.default_phi_N();
    InductionElement<RamifiedElement> phi =
        build_phi_g(hp, Mat2::identity(hp.p), N).scaled(hp.ring.from_int(-hp.p));
    for (long mu = 0; mu < hp.p; ++mu) {
        Mat2 g = Mat2::upper(hp.p, Int(hp.p), teichmuller_int(mu, hp.p, ctx.work_prec), Int(1));
        phi = phi + build_phi_g(hp, g, N).scaled(hp.a);
    }
    // the [1, .] block
    HomogPoly<RamifiedElement> block = HomogPoly<RamifiedElement>::zero(hp.r, hp.ring.zero());
    for (long mu = 0; mu < hp.p; ++mu) {
        Int tl = teichmuller_int(mu, hp.p, ctx.work_prec);
        HomogPoly<RamifiedElement> lin(1, {hp.ring.from_int(tl), hp.ring.one()});
        block = block + lin.pow(hp.r);
    }
    block = block - HomogPoly<RamifiedElement>::monomial(hp.r, 1, hp.ring.from_int(Int(hp.r) * hp.p));
    phi.insert_term(Mat2::identity(hp.p), block, ctx);
    return phi;
}

struct ThetaWitness {
    InductionElement<RamifiedElement> phi;     // = p^{t0} psi; psi itself is not integral
    InductionElement<RamifiedElement> tma_psi; // (T - a) psi = p^{-t0} (T - a) phi, integral
    bool integral = false;
};

// The kernel witness of the quotient relation: psi = p^{-t0} phi has
// (T - a) psi integral, computed as the exact division of (T - a) phi.
inline ThetaWitness theta_kernel_witness(const HeckeParams& hp) {
    CanonCtx ctx = hp.canon();
    InductionElement<RamifiedElement> phi = build_phi(hp);
    InductionElement<RamifiedElement> tma(phi.proto());
    try {
        tma = induction_div_pi(apply_T_minus_a(phi, hp.a, ctx), hp.pi_units(hp.t0));
    } catch (const PrecisionError& err) {
        throw IntegralityFailure(std::string("theta_kernel_witness: (T-a)psi not integral: ") + err.what());
    }
    return ThetaWitness{std::move(phi), std::move(tma), true};
}

} // namespace crysred
