#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crysred/classifier.hpp"
#include "crysred/verifier.hpp"

namespace py = pybind11;
using namespace crysred;

namespace {

Int to_int(const py::object& k) { return Int(py::cast<std::string>(py::str(k))); }

ASpec make_aspec(long p, int e, const std::vector<std::string>& digits, int shift, int precision) {
    ASpec spec{p, e, {}, shift, precision};
    for (const std::string& d : digits) spec.digits.emplace_back(d);
    return spec;
}

py::dict result_dict(const ClassificationResult& res) {
    py::dict d;
    d["variant"] = res.reducible ? "reducible" : "irreducible";
    if (res.reducible) d["trace"] = res.trace;
    else d["t"] = res.t;
    d["v_a"] = res.v_a.str();
    d["conditions"] = py::make_tuple(res.cond_k3, res.cond_kmod, res.cond_val);
    if (res.cond_k3 && res.cond_kmod) {
        d["v_k3"] = res.v_k3;
        d["threshold"] = res.threshold.str();
        d["v_a2_kp"] = res.v_a2_kp;
    }
    d["precision_used"] = res.precision_used;
    return d;
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["statement"] = r.statement;
    py::dict params;
    for (const auto& [k, v] : r.params) params[py::str(k)] = v;
    d["params"] = params;
    d["pass"] = r.pass;
    d["witness"] = r.witness;
    if (r.branch != 0) d["branch"] = r.branch;
    d["ms"] = r.ms;
    return d;
}

} // namespace

PYBIND11_MODULE(_crysred, m) {
    m.doc() = "exact mod-p reduction of 2-dimensional low-slope crystalline "
              "representations: classifier and congruence verifier";

    py::register_exception<PrecisionError>(m, "PrecisionError");
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);

    m.def(
        "classify",
        [](long p, const py::object& k, int e, const std::vector<std::string>& digits,
           int shift, int precision) {
            return result_dict(classify(p, to_int(k), make_aspec(p, e, digits, shift, precision)));
        },
        py::arg("p"), py::arg("k"), py::arg("e") = 2,
        py::arg("digits") = std::vector<std::string>{"1"}, py::arg("shift") = 1,
        py::arg("precision") = 0,
        "Decide the semisimplified mod-p reduction at a = (digit polynomial in pi) * pi^shift");

    m.def(
        "sweep",
        [](long p, const py::object& k,
           const std::vector<std::tuple<int, std::vector<std::string>, int>>& grid,
           int precision) {
            std::vector<ASpec> specs;
            for (const auto& [e, digits, shift] : grid)
                specs.push_back(make_aspec(p, e, digits, shift, precision));
            py::list rows;
            for (const SweepRow& row : sweep(p, to_int(k), specs)) {
                py::dict d;
                if (row.result) d["result"] = result_dict(*row.result);
                else d["error"] = row.error;
                rows.append(d);
            }
            return rows;
        },
        py::arg("p"), py::arg("k"), py::arg("grid"), py::arg("precision") = 0,
        "Best-effort classification over a grid of (e, digits, shift) points");

    m.def(
        "t_exponent", [](long p, const py::object& k) { return t_exponent(p, to_int(k)); },
        py::arg("p"), py::arg("k"));

    m.def(
        "exceptional_discs",
        [](long p, const py::object& k, int precision) -> py::object {
            auto disc = exceptional_discs(p, to_int(k), precision);
            if (!disc) return py::none();
            py::dict d;
            d["radius_exponent"] = disc->radius_exponent;
            d["centres_in_O2"] = disc->centres_in_O2;
            if (disc->centre) {
                py::list cs;
                for (const Int& c : disc->centre->coeffs()) cs.append(c.str());
                d["centre_digits"] = cs;
            }
            return std::move(d);
        },
        py::arg("p"), py::arg("k"), py::arg("precision") = 0,
        "The two discs of reducible a, or None when no reducible locus exists");

    m.def(
        "section2_suite",
        [](long p, int r) {
            py::list out;
            for (const CheckReport& rep : run_section2_suite(p, r)) out.append(report_dict(rep));
            return out;
        },
        py::arg("p"), py::arg("r"));

    m.def(
        "section4_suite",
        [](long p, int r, int e, const std::vector<std::string>& digits, int shift,
           int precision) {
            std::vector<Int> ds;
            for (const std::string& d : digits) ds.emplace_back(d);
            py::list out;
            for (const CheckReport& rep :
                 run_section4_suite(make_hecke_params(p, r, e, ds, shift, precision)))
                out.append(report_dict(rep));
            return out;
        },
        py::arg("p"), py::arg("r"), py::arg("e") = 2,
        py::arg("digits") = std::vector<std::string>{"1"}, py::arg("shift") = 1,
        py::arg("precision") = 0);

    m.def(
        "theta_branch",
        [](long p, int r, int e, const std::vector<std::string>& digits, int shift,
           int precision) {
            std::vector<Int> ds;
            for (const std::string& d : digits) ds.emplace_back(d);
            return report_dict(
                check_theta_relation(make_hecke_params(p, r, e, ds, shift, precision)));
        },
        py::arg("p"), py::arg("r"), py::arg("e") = 2,
        py::arg("digits") = std::vector<std::string>{"1"}, py::arg("shift") = 1,
        py::arg("precision") = 0,
        "The quotient relation satisfied by the mod-pi kernel image: branch 1 or 2");

    m.def(
        "hecke_T",
        [](long p, int r, int m_pow, const std::map<int, long>& digits,
           const std::vector<long>& coeffs, int repeat) {
            if (static_cast<int>(coeffs.size()) != r + 1)
                throw DomainError("expected r+1 coefficients");
            CanonCtx ctx{p, 48};
            CosetRep rep;
            rep.m = m_pow;
            rep.digits = digits;
            std::vector<FpElem> cs;
            for (long c : coeffs) cs.emplace_back(p, c);
            auto E = InductionElement<FpElem>::zero(r, FpElem(p, 0));
            E.insert_term(rep_to_mat(rep, ctx), HomogPoly<FpElem>(r, cs), ctx);
            for (int i = 0; i < repeat; ++i) E = apply_T(E, ctx);
            py::list terms;
            for (const auto& [trep, v] : E.terms()) {
                py::dict t;
                t["m"] = trep.m;
                t["digits"] = trep.digits;
                py::list co;
                for (const FpElem& x : v.coeffs()) co.append(x.value());
                t["coeffs"] = co;
                terms.append(t);
            }
            return terms;
        },
        py::arg("p"), py::arg("r"), py::arg("m") = 0,
        py::arg("digits") = std::map<int, long>{}, py::arg("coeffs") = std::vector<long>{},
        py::arg("repeat") = 1,
        "Apply the Hecke operator to the symbol [(p^m, c; 0, 1), poly] over F_p");
}
