#include "doctest.h"

#include <random>

#include "crysred/induction.hpp"

using namespace crysred;

namespace {

CosetRep make_rep(int m, std::map<int, long> digits) {
    CosetRep rep;
    rep.m = m;
    rep.digits = std::move(digits);
    return rep;
}

Mat2 random_kz(long p, std::mt19937& rng) {
    for (;;) {
        Mat2 k{p, Int(rng() % 40) - 20, Int(rng() % 40) - 20,
               Int(rng() % 40) - 20, Int(rng() % 40) - 20, 0};
        Int det = k.det_num();
        if (det != 0 && det % p != 0) return k;
    }
}

} // namespace

TEST_CASE("canonicalize leaves canonical representatives fixed") {
    CanonCtx ctx{3, 48};
    for (const CosetRep& rep :
         {make_rep(0, {}), make_rep(1, {}), make_rep(1, {{0, 2}}), make_rep(-1, {}),
          make_rep(2, {{0, 1}, {1, 2}}), make_rep(3, {{1, 2}}), make_rep(-2, {{-3, 1}})}) {
        Mat2 g = rep_to_mat(rep, ctx);
        CanonResult cr = canonicalize(g, ctx);
        CHECK(cr.rep == rep);
        // kappa must act trivially (it is central times identity)
        FpElem one(3, 1);
        HomogPoly<FpElem> f(2, {one, FpElem(3, 2), one});
        CHECK((act_kz(cr.kappa, f) - f).is_zero());
    }
}

TEST_CASE("canonicalize of simple matrices") {
    CanonCtx ctx{3, 48};
    CHECK(canonicalize(Mat2::diag(3, Int(1), Int(3)), ctx).rep == make_rep(-1, {}));
    CHECK(canonicalize(Mat2::diag(3, Int(3), Int(1)), ctx).rep == make_rep(1, {}));
    CHECK(canonicalize(Mat2::scalar(3, Int(9)), ctx).rep == make_rep(0, {}));
    // (3, [2]; 0, 1): b = -1 = [2] up to the working modulus
    Mat2 g = Mat2::upper(3, Int(3), teichmuller_int(2, 3, ctx.work_prec), Int(1));
    CHECK(canonicalize(g, ctx).rep == make_rep(1, {{0, 2}}));
    // lower-triangular example needs the column swap: (1 0; 1 1) is in KZ
    Mat2 h = Mat2{3, 1, 0, 1, 1, 0};
    CHECK(canonicalize(h, ctx).rep == make_rep(0, {}));
    CHECK_THROWS_AS(canonicalize(Mat2{3, 1, 1, 1, 1, 0}, ctx), SingularMatrix);
}

TEST_CASE("canonical decomposition is exact: g = rep * kappa up to center") {
    std::mt19937 rng(31);
    for (long p : {3L, 5L}) {
        CanonCtx ctx{p, 48};
        for (int it = 0; it < 40; ++it) {
            int m = static_cast<int>(rng() % 4) - 1;
            std::map<int, long> digits;
            for (int pos = -1; pos < m; ++pos)
                if (rng() % 2) {
                    long lam = static_cast<long>(rng() % (p - 1)) + 1;
                    if (pos >= std::min(0, m)) digits[pos] = lam;
                }
            // keep positions valid: below m, and at least -0 for m >= 0 reps
            std::map<int, long> ok;
            for (auto& [pos, lam] : digits)
                if (pos < m && pos >= std::min(0, m)) ok[pos] = lam;
            CosetRep rep = make_rep(m, ok);
            Mat2 g = rep_to_mat(rep, ctx) * random_kz(p, rng);
            CanonResult cr = canonicalize(g, ctx);
            CHECK(cr.rep == rep);
            // verify rep * kappa = g up to a central power of p.  Both
            // matrices carry stripped integer entries over a p-power scale,
            // so the entries must agree outright -- exactly at the digit-lift
            // working precision, hence modulo p^40 -- while the scales may
            // differ by the central power.
            Mat2 back = rep_to_mat(cr.rep, ctx) * cr.kappa;
            const Int bs[] = {back.a, back.b, back.c, back.d};
            const Int gs[] = {g.a, g.b, g.c, g.d};
            Int modp = pow_int(p, 40);
            bool entries_match = true;
            for (int i = 0; i < 4; ++i)
                if (mod_reduce(bs[i] - gs[i], modp) != 0) entries_match = false;
            CHECK(entries_match);
        }
    }
}

TEST_CASE("insert_term is representative independent") {
    std::mt19937 rng(32);
    long p = 3;
    int r = 4;
    CanonCtx ctx{p, 48};
    FpElem z(p, 0);
    for (int it = 0; it < 30; ++it) {
        std::vector<FpElem> c;
        for (int i = 0; i <= r; ++i) c.emplace_back(p, static_cast<long>(rng() % p));
        HomogPoly<FpElem> v(r, c);
        CosetRep rep = make_rep(2, {{0, static_cast<long>(rng() % p)}, {1, 1}});
        if (rep.digits[0] == 0) rep.digits.erase(0);
        Mat2 base = rep_to_mat(rep, ctx);
        Mat2 kappa = random_kz(p, rng);

        // [base kappa, v] and [base, kappa . v] are the same symbol
        InductionElement<FpElem> E1 = InductionElement<FpElem>::zero(r, z);
        E1.insert_term(base * kappa, v, ctx);
        InductionElement<FpElem> E2 = InductionElement<FpElem>::zero(r, z);
        E2.insert_term(base, act_kz(kappa, v), ctx);
        CHECK(equal_mod(E1, E2, Rat(1)));
        CHECK(!first_discrepancy(E1, E2, Rat(1)).has_value());
    }
}

TEST_CASE("equal_mod precision semantics over a ramified ring") {
    RamRing ring{3, 2, 6};
    CanonCtx ctx{3, 48};
    auto zero = HomogPoly<RamifiedElement>::zero(1, ring.zero());
    InductionElement<RamifiedElement> E(zero), F(zero);
    E.add_raw(make_rep(0, {}), HomogPoly<RamifiedElement>(1, {ring.from_int(9), ring.zero()}));
    // difference has exact valuation 2: congruent mod p^2 but not mod p^{5/2}
    CHECK(equal_mod(E, F, Rat(2)));
    CHECK(!equal_mod(E, F, Rat(5, 2)));
    // an element that vanished at working precision can only certify up to P/e
    InductionElement<RamifiedElement> G(zero);
    G.add_raw(make_rep(0, {}), HomogPoly<RamifiedElement>(1, {ring.from_int(729), ring.zero()}));
    CHECK(equal_mod(G, F, Rat(3)));
    CHECK_THROWS_AS(equal_mod(G, F, Rat(7, 2)), PrecisionError);
}

TEST_CASE("reduce_mod_pi and termwise pi division") {
    RamRing ring{3, 2, 8};
    auto zero = HomogPoly<RamifiedElement>::zero(1, ring.zero());
    InductionElement<RamifiedElement> E(zero);
    E.add_raw(make_rep(1, {}), HomogPoly<RamifiedElement>(
                                   1, {ring.from_int(6).mul_pi(2).truncated(8), ring.from_int(3).mul_pi(2).truncated(8)}));
    auto D = induction_div_pi(E, 2);
    auto R = reduce_mod_pi(D);
    // 6 and 3 both reduce to 0 in F_3; the exact zero term is pruned
    CHECK(R.empty());
    auto D2 = induction_div_pi(E, 4);
    auto R2 = reduce_mod_pi(D2);
    auto it2 = R2.terms().find(make_rep(1, {}));
    REQUIRE(it2 != R2.terms().end());
    CHECK(it2->second.coeff(0).value() == 2); // 6/3 = 2
    CHECK(it2->second.coeff(1).value() == 1); // 3/3 = 1
}
