#include "crysred/induction.hpp"

namespace crysred {

namespace {

// Teichmueller digit expansion of n (an integer known mod p^W) from
// p-position 0 up to position count-1.
std::map<int, long> teich_digits(Int n, long p, int count, int offset, int W) {
    std::map<int, long> out;
    for (int j = 0; j < count; ++j) {
        long lam = static_cast<long>(mod_reduce(n, Int(p)));
        if (lam != 0) {
            out[j + offset] = lam;
            n -= teichmuller_int(lam, p, W);
        }
        n /= p;
    }
    return out;
}

} // namespace

Mat2 rep_to_mat(const CosetRep& rep, const CanonCtx& ctx) {
    int lowest = 0;
    if (!rep.digits.empty()) lowest = std::min(lowest, rep.digits.begin()->first);
    lowest = std::min(lowest, rep.m);
    int den = -lowest; // entries scaled by p^den
    Int chat = 0;
    for (const auto& [pos, lam] : rep.digits)
        chat += teichmuller_int(lam, ctx.p, ctx.work_prec) * pow_int(ctx.p, pos + den);
    Mat2 g = Mat2::upper(ctx.p, pow_int(ctx.p, rep.m + den), chat, pow_int(ctx.p, den));
    g.s = den;
    g.strip();
    return g;
}

CanonResult canonicalize(const Mat2& g, const CanonCtx& ctx) {
    const long p = ctx.p;
    const int W = ctx.work_prec;
    if (g.det_num() == 0) throw SingularMatrix("canonicalize: singular matrix");

    Int a = g.a, b = g.b, c = g.c, d = g.d;
    // common p factor is central, acts trivially; drop it
    {
        long gmin = Mat2{p, a, b, c, d, 0}.min_entry_val();
        Int q = pow_int(p, gmin);
        a /= q; b /= q; c /= q; d /= q;
    }

    // accumulated inverse of the elementary column operations
    Mat2 kacc = Mat2::identity(p);
    if (c != 0) {
        if (d == 0 || vp_int(c, p) < vp_int(d, p)) {
            std::swap(a, b);
            std::swap(c, d);
            kacc = Mat2{p, 0, 1, 1, 0, 0} * kacc;
        }
        long vd = vp_int(d, p);
        Int pvd = pow_int(p, vd);
        Int mod = pow_int(p, W);
        Int q = mod_reduce(-(c / pvd) * mod_inverse(d / pvd, mod), mod);
        // column op: col1 += q * col2
        Int a2 = a + b * q, c2 = c + d * q;
        if (c2 != 0 && vp_int(c2, p) < W)
            throw PrecisionError("canonicalize: column reduction did not clear at working precision");
        a = a2;
        c = 0;
        kacc = Mat2{p, 1, 0, mod_reduce(-q, mod), 1, 0} * kacc;
    }
    if (a == 0 || d == 0) throw SingularMatrix("canonicalize: singular after reduction");

    long va = vp_int(a, p), vd = vp_int(d, p);
    int m = static_cast<int>(va - vd);

    // c = b / d as a scaled integer: binv / p^vd with binv mod p^W
    Int pvd = pow_int(p, vd);
    Int mod = pow_int(p, W);
    Int binv = mod_reduce(b * mod_inverse(d / pvd, mod), mod);

    CosetRep rep;
    rep.m = m;
    int ndigits = m + static_cast<int>(vd);
    if (ndigits > 0) {
        if (ndigits >= W - 4) throw PrecisionError("canonicalize: working precision too small");
        rep.digits = teich_digits(binv, p, ndigits, -static_cast<int>(vd), W);
    }

    // kappa_U = rep^{-1} * (a b; 0 d), exactly
    Int chat_scaled = 0; // c-representative times p^vd
    for (const auto& [pos, lam] : rep.digits)
        chat_scaled += teichmuller_int(lam, p, W) * pow_int(p, pos + static_cast<int>(vd));
    Int ka, kb;
    Int num_b = pvd * b - chat_scaled * d;
    Int pm_vd = pow_int(p, m + static_cast<int>(vd));
    if (m >= 0) {
        Int pm = pow_int(p, m);
        if (a % pm != 0) throw PrecisionError("canonicalize: unexpected indivisibility");
        ka = a / pm;
    } else {
        ka = a * pow_int(p, -m);
    }
    if (num_b % pm_vd != 0) throw PrecisionError("canonicalize: unexpected indivisibility");
    kb = num_b / pm_vd;

    Mat2 kappa = Mat2{p, ka, kb, 0, d, 0} * kacc;
    return CanonResult{std::move(rep), std::move(kappa)};
}

} // namespace crysred
