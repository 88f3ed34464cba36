#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crysred/matrix.hpp"
#include "crysred/polymod.hpp"
#include "crysred/ramified.hpp"
#include "crysred/valuation.hpp"

namespace crysred {

// Canonical representative (m, c) of the coset (p^m, c; 0, 1) KZ, with c
// stored as its nonzero Teichmueller digits: c = sum_j [lambda_j] p^j over
// positions j < m. Positions below 0 appear only for negative-power reps.
struct CosetRep {
    int m = 0;
    std::map<int, long> digits;

    friend auto operator<=>(const CosetRep&, const CosetRep&) = default;
};

struct CanonCtx {
    long p;
    int work_prec = 48; // p-digits carried through modular division and digits
};

struct CanonResult {
    CosetRep rep;
    Mat2 kappa; // in KZ, so that g = (p^m, c; 0, 1) * kappa up to center
};

// Iwasawa-style column reduction to the canonical coset representative.
CanonResult canonicalize(const Mat2& g, const CanonCtx& ctx);

// The matrix (p^m, c; 0, 1) rebuilt from a representative.
Mat2 rep_to_mat(const CosetRep& rep, const CanonCtx& ctx);

// A polynomial term may be dropped from the sum only when its vanishing is
// exact (valuation infinity, as over F_p).  A ramified zero merely certifies
// vanishing to its working precision; its term must stay so that equal_mod
// can refuse to answer above that precision instead of silently passing.
template <class R>
bool certainly_zero(const HomogPoly<R>& v) {
    if (!v.is_zero()) return false;
    for (const R& x : v.coeffs())
        if (!x.val_pi().is_infinite()) return false;
    return true;
}

// Finite formal sum of [CosetRep, HomogPoly] terms.
template <class R>
class InductionElement {
public:
    explicit InductionElement(HomogPoly<R> proto_zero) : proto_(std::move(proto_zero)) {}

    static InductionElement zero(int degree, const R& ring_proto) {
        return InductionElement(HomogPoly<R>::zero(degree, ring_proto));
    }

    int degree() const { return proto_.degree(); }
    const HomogPoly<R>& proto() const { return proto_; }
    bool empty() const { return terms_.empty(); }
    const std::map<CosetRep, HomogPoly<R>>& terms() const { return terms_; }

    void add_raw(const CosetRep& rep, const HomogPoly<R>& v) {
        auto it = terms_.find(rep);
        if (it == terms_.end()) {
            if (!certainly_zero(v)) terms_.emplace(rep, v);
            return;
        }
        HomogPoly<R> sum = it->second + v;
        if (certainly_zero(sum)) terms_.erase(it);
        else it->second = std::move(sum);
    }

    // [g, v]: canonicalize g and push the KZ factor into the polynomial
    void insert_term(const Mat2& g, const HomogPoly<R>& v, const CanonCtx& ctx) {
        if (v.degree() != degree()) throw RingMismatch("insert_term: degree mismatch");
        CanonResult cr = canonicalize(g, ctx);
        add_raw(cr.rep, act_kz(cr.kappa, v));
    }

    InductionElement operator+(const InductionElement& o) const {
        InductionElement out = *this;
        for (const auto& [rep, v] : o.terms_) out.add_raw(rep, v);
        return out;
    }
    InductionElement operator-(const InductionElement& o) const {
        InductionElement out = *this;
        for (const auto& [rep, v] : o.terms_) out.add_raw(rep, -v);
        return out;
    }
    InductionElement operator-() const {
        InductionElement out(proto_);
        for (const auto& [rep, v] : terms_) out.terms_.emplace(rep, -v);
        return out;
    }
    InductionElement scaled(const R& s) const {
        InductionElement out(proto_);
        for (const auto& [rep, v] : terms_) {
            HomogPoly<R> w = v.scaled(s);
            if (!certainly_zero(w)) out.terms_.emplace(rep, std::move(w));
        }
        return out;
    }

    template <class F>
    auto map_coefficients(F&& f) const {
        using R2 = decltype(f(proto_.proto()));
        std::vector<R2> pc;
        pc.reserve(static_cast<size_t>(degree()) + 1);
        for (const R& x : proto_.coeffs()) pc.push_back(f(x));
        InductionElement<R2> out{HomogPoly<R2>(degree(), std::move(pc))};
        for (const auto& [rep, v] : terms_) {
            std::vector<R2> c;
            c.reserve(v.coeffs().size());
            for (const R& x : v.coeffs()) c.push_back(f(x));
            HomogPoly<R2> w(degree(), std::move(c));
            if (!certainly_zero(w)) out.add_raw(rep, w);
        }
        return out;
    }

private:
    HomogPoly<R> proto_;
    std::map<CosetRep, HomogPoly<R>> terms_;
};

// Congruence test: every coefficient of E1 - E2 has valuation at least
// modulus (given in p-units); PrecisionError when undecidable.
template <class R>
bool equal_mod(const InductionElement<R>& E1, const InductionElement<R>& E2, const Rat& modulus) {
    InductionElement<R> diff = E1 - E2;
    for (const auto& [rep, v] : diff.terms())
        for (const R& x : v.coeffs())
            if (!valuation_at_least(x.val_pi(), modulus)) return false;
    return true;
}

// First offending (rep, monomial index) of E1 - E2 below the modulus, if any.
template <class R>
std::optional<std::pair<CosetRep, int>> first_discrepancy(const InductionElement<R>& E1,
                                                          const InductionElement<R>& E2,
                                                          const Rat& modulus) {
    InductionElement<R> diff = E1 - E2;
    for (const auto& [rep, v] : diff.terms())
        for (int i = 0; i <= v.degree(); ++i)
            if (!valuation_at_least(v.coeff(i).val_pi(), modulus)) return std::make_pair(rep, i);
    return std::nullopt;
}

// Termwise coefficient reduction O -> F_p.
inline InductionElement<FpElem> reduce_mod_pi(const InductionElement<RamifiedElement>& E) {
    return E.map_coefficients([](const RamifiedElement& x) {
        return FpElem(x.prime(), x.residue());
    });
}

// Exact division by pi^k, termwise.
inline InductionElement<RamifiedElement> induction_div_pi(const InductionElement<RamifiedElement>& E, int k) {
    return E.map_coefficients([k](const RamifiedElement& x) { return x.div_pi(k); });
}

// [g, v] -> [g, Psi(v)] termwise; r = 1 mod p-1 and r > p required.
inline InductionElement<FpElem> apply_psi_termwise(const InductionElement<FpElem>& E) {
    long p = E.proto().proto().prime();
    int r = E.degree();
    if (r <= p || (r - 1) % (p - 1) != 0)
        throw HypothesisError("apply_psi_termwise: requires r > p and r = 1 mod p-1");
    InductionElement<FpElem> out = InductionElement<FpElem>::zero(static_cast<int>(p) - 2, FpElem(p, 0));
    for (const auto& [rep, v] : E.terms()) out.add_raw(rep, psi(v));
    return out;
}

} // namespace crysred
