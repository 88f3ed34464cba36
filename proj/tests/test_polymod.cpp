#include "doctest.h"

#include <random>

#include "crysred/polymod.hpp"

using namespace crysred;

namespace {

HomogPoly<FpElem> random_poly(long p, int r, std::mt19937& rng) {
    std::vector<FpElem> c;
    c.reserve(static_cast<size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) c.emplace_back(p, static_cast<long>(rng() % p));
    return HomogPoly<FpElem>(r, std::move(c));
}

} // namespace

TEST_CASE("monomial index convention: coefficient i multiplies x^{r-i} y^i") {
    FpElem one(5, 1);
    auto f = HomogPoly<FpElem>::monomial(7, 1, one); // x^6 y
    CHECK(f.coeff(1) == one);
    CHECK(f.coeff(6).is_zero());
    // y ->; 2y turns x^6 y into 2 x^6 y
    auto g = act_entries(Int(1), Int(0), Int(0), Int(2), f);
    CHECK(g.coeff(1) == FpElem(5, 2));
}

TEST_CASE("product and pow agree with direct expansion") {
    FpElem one(3, 1);
    // (x + y)^2 = x^2 + 2xy + y^2
    HomogPoly<FpElem> lin(1, {one, one});
    auto sq = lin.pow(2);
    CHECK(sq.coeff(0) == one);
    CHECK(sq.coeff(1) == FpElem(3, 2));
    CHECK(sq.coeff(2) == one);
    CHECK((lin * lin - sq).is_zero());
}

TEST_CASE("substitution composes like matrix multiplication") {
    std::mt19937 rng(99);
    for (long p : {3L, 5L}) {
        for (int it = 0; it < 25; ++it) {
            auto f = random_poly(p, 6, rng);
            Int a = rng() % p, b = rng() % p, c = rng() % p, d = rng() % p;
            Int e = rng() % p, g = rng() % p, h = rng() % p, i = rng() % p;
            auto lhs = act_entries(a, b, c, d, act_entries(e, g, h, i, f));
            // row-vector convention: (x,y) -> (x,y) M, so outer-then-inner is M N
            auto rhs = act_entries(a * e + b * h, a * g + b * i, c * e + d * h, c * g + d * i, f);
            CHECK((lhs - rhs).is_zero());
        }
    }
}

TEST_CASE("Psi on the three basis elements") {
    for (auto [p, r] : {std::pair<long, int>{3, 7}, {5, 21}, {7, 13}}) {
        FpElem one(p, 1);
        int d = static_cast<int>(p) - 2;
        CHECK(psi(HomogPoly<FpElem>::monomial(r, r, one)).is_zero());
        CHECK(psi(HomogPoly<FpElem>::monomial(r, 0, one)).is_zero());
        auto img = psi(HomogPoly<FpElem>::monomial(r, 1, one));
        CHECK((img - HomogPoly<FpElem>::monomial(d, 0, one)).is_zero());
    }
}

TEST_CASE("Psi hypothesis guards") {
    FpElem one(5, 1);
    CHECK_THROWS_AS(psi(HomogPoly<FpElem>::monomial(3, 0, one)), HypothesisError);  // r < p
    CHECK_THROWS_AS(psi(HomogPoly<FpElem>::monomial(7, 0, one)), HypothesisError);  // r != 1 mod p-1
}

TEST_CASE("Psi equivariance with the det twist, exhaustive over GL_2(F_3)") {
    std::mt19937 rng(11);
    long p = 3;
    int r = 7;
    for (int it = 0; it < 5; ++it) {
        auto f = random_poly(p, r, rng);
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b)
                for (long c = 0; c < p; ++c)
                    for (long d = 0; d < p; ++d) {
                        long det = ((a * d - b * c) % p + p) % p;
                        if (det == 0) continue;
                        auto lhs = psi(act_entries(Int(a), Int(b), Int(c), Int(d), f));
                        auto rhs = act_entries(Int(a), Int(b), Int(c), Int(d), psi(f));
                        CHECK((lhs - rhs.scaled(FpElem(p, det))).is_zero());
                    }
    }
}

TEST_CASE("Psi equivariance, randomized at p = 5") {
    std::mt19937 rng(12);
    long p = 5;
    int r = 21;
    for (int it = 0; it < 12; ++it) {
        auto f = random_poly(p, r, rng);
        long a = rng() % p, b = rng() % p, c = rng() % p, d = rng() % p;
        long det = ((a * d - b * c) % p + p) % p;
        if (det == 0) continue;
        auto lhs = psi(act_entries(Int(a), Int(b), Int(c), Int(d), f));
        auto rhs = act_entries(Int(a), Int(b), Int(c), Int(d), psi(f));
        CHECK((lhs - rhs.scaled(FpElem(p, det))).is_zero());
    }
}
