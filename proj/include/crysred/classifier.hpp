#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crysred/ramified.hpp"

namespace crysred {

// a = (digit polynomial in pi) * pi^shift inside O = Z_p[pi]/(pi^e - p).
// precision = requested pi-digits; 0 picks a default from (p, k).
struct ASpec {
    long p = 0;
    int e = 1;
    std::vector<Int> digits;
    int shift = 0;
    int precision = 0;
};

struct ClassificationResult {
    bool reducible = false;
    int t = 0;     // irreducible: exponent of the niveau-2 character, in 1..p-1
    long trace = 0; // reducible: Frobenius trace in F_p

    // diagnostics
    Rat v_a;
    bool cond_k3 = false;   // k > 3
    bool cond_kmod = false; // k = 3 mod p-1
    bool cond_val = false;  // v(k-3) + 1 + v(a) <= v(a^2 - (k-2)p)
    long v_k3 = -1;         // set when the first two conditions hold
    Rat threshold;          // v(k-3) + 1 + v(a), same proviso
    std::string v_a2_kp;    // v(a^2 - (k-2)p) as printed by ExtValuation
    int precision_used = 0; // pi-digits of the successful attempt
};

// t = [k-2] + 1 where [k-2] in {0,..,p-2} is k-2 mod p-1.
int t_exponent(long p, const Int& k);

// The decision procedure. Retries with doubled precision (up to 8x the
// initial request) before surfacing a PrecisionError.
ClassificationResult classify(long p, const Int& k, const ASpec& a);

// The two exceptional discs |a -+ sqrt((k-2)p)| <= p^{-1-v(k-3)}.
struct DiscDescription {
    long radius_exponent = 0;     // membership means v(a -+ centre) >= this
    bool centres_in_O2 = false;   // unit part of k-2 is a square mod p
    std::optional<RamifiedElement> centre; // +sqrt((k-2)p) in Z_p[pi]/(pi^2-p)
};

// nullopt when k = 3, k != 3 mod p-1, or k = 2 mod p (no reducible locus).
std::optional<DiscDescription> exceptional_discs(long p, const Int& k, int precision = 0);

// v(a - centre) >= radius_exponent or v(a + centre) >= radius_exponent;
// requires a in the e = 2 ring of the disc centres.
bool disc_contains(const DiscDescription& disc, const RamifiedElement& a);

struct SweepRow {
    ASpec a;
    std::optional<ClassificationResult> result;
    std::string error; // nonempty iff the point failed
};

// Best-effort grid classification; per-point errors recorded, never thrown.
std::vector<SweepRow> sweep(long p, const Int& k, const std::vector<ASpec>& grid);

} // namespace crysred
