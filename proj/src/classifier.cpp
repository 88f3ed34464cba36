#include "crysred/classifier.hpp"

namespace crysred {

namespace {

// square root of u mod p^N for p-unit u that is a QR mod p
Int hensel_sqrt(const Int& u, long p, int N) {
    long r0 = -1;
    long up = static_cast<long>(mod_reduce(u, Int(p)));
    for (long x = 1; x < p; ++x)
        if (x * x % p == up) { r0 = x; break; }
    if (r0 < 0) throw NonSquareCentre("hensel_sqrt: not a square mod p");
    Int x(r0);
    Int inv2 = mod_inverse(Int(2), pow_int(p, N));
    int prec = 1;
    Int mod = Int(p);
    while (prec < N) {
        prec = std::min(2 * prec, N);
        mod = pow_int(p, prec);
        x = mod_reduce((x + mod_reduce(u, mod) * mod_inverse(x, mod)) % mod * inv2, mod);
    }
    return x;
}

ClassificationResult attempt(long p, const Int& k, const ASpec& spec, int P) {
    RamRing ring{p, spec.e, P};
    RamifiedElement a = ring.from_digits(spec.digits).mul_pi(spec.shift).truncated(P);

    ExtValuation va = a.val_pi();
    if (!va.exact() || va.is_infinite() || !(Rat(0) < va.value() && va.value() < Rat(1)))
        throw DomainError("classify: 0 < v(a) < 1 required (got v(a) = " + va.str() + ")");

    ClassificationResult res;
    res.v_a = va.value();
    res.precision_used = P;
    res.t = t_exponent(p, k);
    res.cond_k3 = k > 3;
    res.cond_kmod = mod_reduce(k - 3, Int(p - 1)) == 0;
    if (!(res.cond_k3 && res.cond_kmod)) return res;

    res.v_k3 = vp_int(k - 3, p);
    res.threshold = Rat(res.v_k3 + 1) + res.v_a;
    RamifiedElement a2kp = a * a - ring.from_int((k - 2) * p);
    res.v_a2_kp = a2kp.val_pi().str();
    res.cond_val = valuation_at_least(a2kp.val_pi(), res.threshold);
    if (!res.cond_val) return res;

    res.reducible = true;
    RamifiedElement num = ring.from_int((k - 2) * p) - a * a;
    RamifiedElement den = a * ring.from_int(Int(p) * (k - 3));
    res.trace = ram_div(num, den).residue();
    return res;
}

int default_precision(long p, const Int& k, const ASpec& spec) {
    long t = (k > 3 && mod_reduce(k - 3, Int(p - 1)) == 0) ? vp_int(k - 3, p) : 0;
    return spec.e * static_cast<int>(t + 4);
}

} // namespace

int t_exponent(long p, const Int& k) {
    if (p < 3 || k < 2) throw DomainError("t_exponent: need p > 2 and k >= 2");
    return static_cast<int>(mod_reduce(k - 2, Int(p - 1))) + 1;
}

ClassificationResult classify(long p, const Int& k, const ASpec& a) {
    if (p < 3 || k < 2) throw DomainError("classify: need p > 2 and k >= 2");
    if (a.e < 1 || a.p != p) throw DomainError("classify: a-spec prime/ramification invalid");
    int P0 = a.precision > 0 ? a.precision : default_precision(p, k, a);
    std::string last;
    for (int P = P0; P <= 8 * P0; P *= 2) {
        try {
            return attempt(p, k, a, P);
        } catch (const PrecisionError& err) {
            last = err.what();
        }
    }
    throw PrecisionError("classify: undecidable at precision " + std::to_string(8 * P0) +
                         " pi-digits (" + last + "); retry with precision >= " +
                         std::to_string(16 * P0));
}

std::optional<DiscDescription> exceptional_discs(long p, const Int& k, int precision) {
    if (p < 3 || k < 2) throw DomainError("exceptional_discs: need p > 2 and k >= 2");
    if (k == 3 || mod_reduce(k - 3, Int(p - 1)) != 0 || mod_reduce(k - 2, Int(p)) == 0)
        return std::nullopt;
    DiscDescription disc;
    long v_k3 = vp_int(k - 3, p);
    disc.radius_exponent = 1 + v_k3;
    long up = static_cast<long>(mod_reduce(k - 2, Int(p)));
    disc.centres_in_O2 = Int(powm(Int(up), Int((p - 1) / 2), Int(p))) == 1;
    if (disc.centres_in_O2) {
        int P = precision > 0 ? precision : 2 * static_cast<int>(v_k3 + 6);
        int Np = (P + 1) / 2 + 1;
        Int s = hensel_sqrt(mod_reduce(k - 2, pow_int(p, Np)), p, Np);
        RamRing ring{p, 2, P};
        disc.centre = ring.from_int(s).mul_pi(1).truncated(P);
    }
    return disc;
}

bool disc_contains(const DiscDescription& disc, const RamifiedElement& a) {
    if (!disc.centre)
        throw NonSquareCentre("disc_contains: centres lie outside Z_p[pi]/(pi^2-p)");
    Rat radius(disc.radius_exponent);
    bool unsure = false;
    for (const RamifiedElement& c : {*disc.centre, -*disc.centre}) {
        try {
            if (valuation_at_least((a - c).val_pi(), radius)) return true;
        } catch (const PrecisionError&) {
            unsure = true;
        }
    }
    if (unsure) throw PrecisionError("disc_contains: membership undecidable at this precision");
    return false;
}

std::vector<SweepRow> sweep(long p, const Int& k, const std::vector<ASpec>& grid) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const ASpec& a : grid) {
        SweepRow row;
        row.a = a;
        try {
            row.result = classify(p, k, a);
        } catch (const std::exception& err) {
            row.error = err.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace crysred
