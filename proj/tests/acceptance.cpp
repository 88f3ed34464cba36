// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crysred/classifier.hpp"
#include "crysred/verifier.hpp"

using namespace crysred;

namespace {

struct ParamPoint {
    long p;
    int r;
    std::vector<Int> digits; // unit digits; a = unit * pi in the e = 2 ring
};

std::vector<ParamPoint> hecke_points() {
    std::vector<ParamPoint> pts;
    for (auto [p, r] : {std::pair<long, int>{3, 7}, {3, 9}, {5, 21}})
        for (const std::vector<Int>& d :
             {std::vector<Int>{1}, {2}, {1, 1}, {4, 3}})
            pts.push_back({p, r, d});
    return pts;
}

HeckeParams point_params(const ParamPoint& pt, int precmult) {
    int prec = 0;
    if (precmult > 1) {
        HeckeParams base = make_hecke_params(pt.p, pt.r, 2, pt.digits, 1);
        prec = precmult * base.ring.P;
    }
    return make_hecke_params(pt.p, pt.r, 2, pt.digits, 1, prec);
}

std::string digits_str(const std::vector<Int>& d) {
    std::ostringstream os;
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str();
}

// ---- criterion 1: the p-adic congruence suite over the full (p, r) range

bool criterion1(std::string& detail) {
    for (long p : {3L, 5L, 7L})
        for (int r = static_cast<int>(p) + 1; r <= 4 * static_cast<int>(p) + 1; ++r) {
            if ((r - 1) % (p - 1) != 0) continue;
            for (const CheckReport& rep : run_section2_suite(p, r))
                if (!rep.pass || !rep.witness.empty()) {
                    detail = rep.statement + " p=" + std::to_string(p) +
                             " r=" + std::to_string(r) + ": " + rep.witness;
                    return false;
                }
        }
    return true;
}

// ---- criterion 2: randomized valuation / Teichmueller / inverse kernels

bool criterion2(std::string& detail) {
    std::mt19937 rng(20260824);
    const long primes[] = {3, 5, 7};
    for (int it = 0; it < 1000; ++it) {
        long p = primes[rng() % 3];
        int e = 1 + static_cast<int>(rng() % 3);
        RamRing ring{p, e, 30};
        auto rand_elem = [&](int shift) {
            std::vector<Int> d{Int(1 + rng() % (p - 1))};
            for (int i = 1; i < e; ++i) d.emplace_back(rng() % p);
            return ring.from_digits(d).mul_pi(shift).truncated(30);
        };
        int sx = static_cast<int>(rng() % (2 * e));
        int sy = static_cast<int>(rng() % (2 * e));
        RamifiedElement x = rand_elem(sx), y = rand_elem(sy);
        ExtValuation vx = x.val_pi(), vy = y.val_pi(), vxy = (x * y).val_pi();
        if (!vxy.exact() || !(vxy.value() == vx.value() + vy.value())) {
            detail = "v(xy) != v(x) + v(y) at iteration " + std::to_string(it);
            return false;
        }
        if (!valuation_at_least((x + y).val_pi(), rat_min(vx.value(), vy.value()))) {
            detail = "ultrametric inequality failed at iteration " + std::to_string(it);
            return false;
        }
        long lam = static_cast<long>(rng() % p);
        if (teichmuller(lam, p, 20).residue() != lam) {
            detail = "residue(teichmuller(" + std::to_string(lam) + ")) != lambda";
            return false;
        }
        Int v = Int(rng() % 1000000) * p + (1 + rng() % (p - 1));
        PadicInt z(p, 20, v);
        PadicInt err = z * z.inverse() - z.from_int_like(1);
        if (!valuation_at_least(err.val_pi(), Rat(10))) {
            detail = "p-adic inverse failed for " + std::to_string((long)v);
            return false;
        }
        RamifiedElement u = rand_elem(0);
        if ((u * u.invert_unit()).residue() != 1) {
            detail = "unit inverse failed at iteration " + std::to_string(it);
            return false;
        }
    }
    return true;
}

// ---- criterion 3: the three Hecke congruences across the parameter grid

bool criterion3(int precmult, std::string& detail, std::string& summary) {
    for (const ParamPoint& pt : hecke_points()) {
        HeckeParams hp = point_params(pt, precmult);
        for (const CheckReport& rep :
             {check_Tma_generator(hp), check_Xg(hp), check_TmaX(hp)}) {
            summary += rep.statement + " p=" + std::to_string(pt.p) +
                       " r=" + std::to_string(pt.r) + " u=" + digits_str(pt.digits) +
                       (rep.pass ? " pass;" : " FAIL;");
            if (!rep.pass) {
                detail = rep.statement + " p=" + std::to_string(pt.p) +
                         " r=" + std::to_string(pt.r) + " u=" + digits_str(pt.digits) +
                         ": " + rep.witness;
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 4: quotient-relation dichotomy, agreement with the classifier

bool criterion4(int precmult, std::string& detail, std::string& summary) {
    for (const ParamPoint& pt : hecke_points()) {
        HeckeParams hp = point_params(pt, precmult);
        CheckReport rep = check_theta_relation(hp);
        if (!rep.pass || (rep.branch != 1 && rep.branch != 2)) {
            detail = "theta p=" + std::to_string(pt.p) + " r=" + std::to_string(pt.r) +
                     " u=" + digits_str(pt.digits) + ": " + rep.witness;
            return false;
        }
        ASpec spec{pt.p, 2, pt.digits, 1, precmult > 1 ? precmult * hp.ring.P : 0};
        ClassificationResult cls = classify(pt.p, Int(pt.r) + 2, spec);
        if (cls.reducible != (rep.branch == 2)) {
            detail = "branch disagrees with classify at p=" + std::to_string(pt.p) +
                     " r=" + std::to_string(pt.r) + " u=" + digits_str(pt.digits);
            return false;
        }
        summary += "theta p=" + std::to_string(pt.p) + " r=" + std::to_string(pt.r) +
                   " u=" + digits_str(pt.digits) + " branch=" + std::to_string(rep.branch) + ";";
    }
    // tuned point: reducible branch with trace 2 in F_3
    HeckeParams tuned = point_params({3, 7, {4, 3}}, precmult);
    CheckReport rep = check_theta_relation(tuned);
    std::string tau;
    for (const auto& [k, v] : rep.params)
        if (k == "taubar") tau = v;
    if (!rep.pass || rep.branch != 2 || tau != "2") {
        detail = "tuned point: branch=" + std::to_string(rep.branch) + " taubar=" + tau;
        return false;
    }
    summary += "tuned taubar=" + tau + ";";
    return true;
}

// ---- criterion 5: classifier point checks

bool criterion5(int precmult, std::string& detail, std::string& summary) {
    auto run = [&](long p, long k, ASpec spec) {
        if (precmult > 1) {
            ClassificationResult base = classify(p, Int(k), spec);
            spec.precision = precmult * base.precision_used;
        }
        return classify(p, Int(k), spec);
    };
    auto c1 = run(5, 11, ASpec{5, 2, {3}, 1, 0});
    auto c2 = run(5, 11, ASpec{5, 2, {1}, 1, 0});
    auto c3 = run(3, 9, ASpec{3, 2, {1}, 1, 0});
    if (!(c1.reducible && c1.trace == 0)) { detail = "p=5 k=11 a=3pi"; return false; }
    if (c2.reducible || c2.t != 2) { detail = "p=5 k=11 a=pi"; return false; }
    if (c3.reducible || c3.t != 2) { detail = "p=3 k=9 a=pi"; return false; }
    summary += "5,11,3pi:R0;5,11,pi:I2;3,9,pi:I2;";

    std::mt19937 rng(71);
    for (int it = 0; it < 20; ++it) {
        int e = (it % 3 == 0) ? 2 : 3;                    // v(a) in {1/2, 1/3, 2/3}
        int shift = (e == 2) ? 1 : 1 + static_cast<int>(rng() % 2);
        std::vector<Int> d{Int(1 + rng() % 4), Int(rng() % 5)};
        auto c = run(5, 7, ASpec{5, e, d, shift, 0});
        summary += c.reducible ? "R;" : "I;";
        if (c.reducible) {
            detail = "p=5 k=7 random point classified reducible";
            return false;
        }
    }
    return true;
}

// ---- criterion 6: disc membership is equivalent to reducibility

bool criterion6(int precmult, std::string& detail, std::string& summary) {
    std::mt19937 rng(62);
    for (auto [p, k] : {std::pair<long, long>{5, 11}, {3, 9}}) {
        int prec = 40 * precmult;
        auto disc = exceptional_discs(p, k, prec);
        if (!disc || !disc->centre) { detail = "missing disc description"; return false; }
        for (int it = 0; it < 100; ++it) {
            std::vector<Int> d{Int(1 + rng() % (p - 1)), Int(rng() % p), Int(rng() % p)};
            ASpec spec{p, 2, d, 1, prec};
            bool red = classify(p, Int(k), spec).reducible;
            RamifiedElement a =
                RamRing{p, 2, prec}.from_digits(d).mul_pi(1).truncated(prec);
            if (red != disc_contains(*disc, a)) {
                detail = "discrepancy at p=" + std::to_string(p) + " k=" + std::to_string(k) +
                         " digits=" + digits_str(d);
                return false;
            }
            summary += red ? "R" : "I";
        }
        summary += ";";
    }
    return true;
}

// ---- criterion 7: every check must notice a dropped right-hand-side block

bool criterion7(std::string& detail) {
    HeckeParams hp = make_hecke_params(3, 7, 2, {1}, 1);
    // Xg and TmaX need the tuned unit: at a = pi the dropped blocks carry
    // (r-1)p or a(r-1)p and sit at or above the comparison modulus.
    HeckeParams hpu = make_hecke_params(3, 7, 2, {4, 3}, 1);
    struct Mut {
        const char* name;
        CheckReport rep;
    };
    std::vector<Mut> muts;
    muts.push_back({"T_symp2", check_T_symp2(3, 0)});
    muts.push_back({"Tma_generator", check_Tma_generator(hp, 0)});
    muts.push_back({"Xg", check_Xg(hpu, 0)});
    muts.push_back({"TmaX", check_TmaX(hpu, 0)});
    muts.push_back({"theta", check_theta_relation(hp, 0)});
    for (const Mut& m : muts)
        if (m.rep.pass || m.rep.witness.empty()) {
            detail = std::string(m.name) + ": mutation not detected";
            return false;
        }
    return true;
}

// ---- criterion 8: double precision idempotence plus honest precision errors

bool criterion8(const std::string& base3, const std::string& base4,
                const std::string& base5, const std::string& base6, std::string& detail) {
    std::string d, s3, s4, s5, s6;
    if (!criterion3(2, d, s3)) { detail = "criterion 3 at 2x precision: " + d; return false; }
    if (!criterion4(2, d, s4)) { detail = "criterion 4 at 2x precision: " + d; return false; }
    if (!criterion5(2, d, s5)) { detail = "criterion 5 at 2x precision: " + d; return false; }
    if (!criterion6(2, d, s6)) { detail = "criterion 6 at 2x precision: " + d; return false; }
    if (s3 != base3) { detail = "criterion 3 results changed at 2x precision"; return false; }
    if (s4 != base4) { detail = "criterion 4 results changed at 2x precision"; return false; }
    if (s5 != base5) { detail = "criterion 5 results changed at 2x precision"; return false; }
    if (s6 != base6) { detail = "criterion 6 results changed at 2x precision"; return false; }

    // a^2 - (k-2)p engineered to vanish beyond the visible digits
    Int k = Int(2) * pow_int(3, 60) + 3;
    Int mod = pow_int(3, 40);
    Int u = mod_reduce(k - 2, mod);
    Int x = 1, inv2 = mod_inverse(Int(2), mod);
    for (int i = 0; i < 8; ++i)
        x = mod_reduce((x + u * mod_inverse(x, mod)) % mod * inv2, mod);
    try {
        classify(3, k, ASpec{3, 2, {x}, 1, 10});
        detail = "near-tie input was classified instead of raising PrecisionError";
        return false;
    } catch (const PrecisionError&) {
    }
    return true;
}

} // namespace

int main() {
    bool all = true;
    auto report = [&](int id, bool pass, const std::string& detail) {
        std::printf("CRITERION %d: %s%s%s\n", id, pass ? "PASS" : "FAIL",
                    (!pass && !detail.empty()) ? " -- " : "", (!pass) ? detail.c_str() : "");
        all = all && pass;
    };

    std::string detail, s3, s4, s5, s6;
    try {
        detail.clear(); report(1, criterion1(detail), detail);
        detail.clear(); report(2, criterion2(detail), detail);
        detail.clear(); report(3, criterion3(1, detail, s3), detail);
        detail.clear(); report(4, criterion4(1, detail, s4), detail);
        detail.clear(); report(5, criterion5(1, detail, s5), detail);
        detail.clear(); report(6, criterion6(1, detail, s6), detail);
        detail.clear(); report(7, criterion7(detail), detail);
        detail.clear(); report(8, criterion8(s3, s4, s5, s6, detail), detail);
    } catch (const std::exception& err) {
        std::printf("UNEXPECTED EXCEPTION: %s\n", err.what());
        return 1;
    }
    return all ? 0 : 1;
}
