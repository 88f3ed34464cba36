// crysred: classify a point, sweep a grid, run the verification suites, or
// dump Hecke computations, with deterministic JSON output.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crysred/classifier.hpp"
#include "crysred/verifier.hpp"

using namespace crysred;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success / all-pass, 1 usage, 2 domain, 3 precision,
// 4 internal-check failure
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitInternal = 4;

struct Common {
    int precision = 0; // 0 = library default
    int jobs = 1;
    std::string format = "json";
    std::string config;
    bool precision_set = false;
    bool jobs_set = false;
    bool format_set = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--precision", c.precision, "working precision in pi-digits (0 = default)");
    cmd->add_option("--jobs", c.jobs, "worker pool size for fan-out commands")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--config", c.config, "key=value config file (flags override)");
}

// precedence: flag > CRYSRED_PRECISION env > config file > library default
void resolve_common(CLI::App* cmd, Common& c) {
    c.precision_set = cmd->count("--precision") > 0;
    c.jobs_set = cmd->count("--jobs") > 0;
    c.format_set = cmd->count("--format") > 0;
    std::map<std::string, std::string> file;
    if (!c.config.empty()) {
        std::ifstream in(c.config);
        if (!in) throw DomainError("config file not readable: " + c.config);
        std::string line;
        while (std::getline(in, line)) {
            auto eq = line.find('=');
            if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
            file[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    if (!c.precision_set) {
        if (const char* env = std::getenv("CRYSRED_PRECISION"))
            c.precision = std::atoi(env);
        else if (file.count("precision"))
            c.precision = std::atoi(file["precision"].c_str());
    }
    if (!c.jobs_set && file.count("jobs")) c.jobs = std::max(1, std::atoi(file["jobs"].c_str()));
    if (!c.format_set && file.count("format")) c.format = file["format"];
}

std::vector<Int> parse_digits(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw DomainError("empty digit in list: " + s);
        out.emplace_back(tok);
    }
    if (out.empty()) throw DomainError("empty digit list");
    return out;
}

ordered_json report_json(const CheckReport& r) {
    ordered_json j;
    j["statement"] = r.statement;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["pass"] = r.pass;
    j["witness"] = r.witness;
    if (r.branch != 0) j["branch"] = r.branch;
    j["ms"] = r.ms;
    return j;
}

ordered_json classification_json(long p, const Int& k, const ClassificationResult& res) {
    ordered_json j;
    j["variant"] = res.reducible ? "reducible" : "irreducible";
    if (res.reducible) {
        j["trace"] = res.trace;
    } else {
        j["t"] = res.t;
        j["note"] = "t is the exponent of the niveau-2 fundamental character; "
                    "conventions differing by a cyclotomic twist exist";
    }
    j["p"] = p;
    j["k"] = k.str();
    j["v_a"] = res.v_a.str();
    ordered_json cond;
    cond["k_gt_3"] = res.cond_k3;
    cond["k_mod_p_minus_1"] = res.cond_kmod;
    cond["valuation"] = res.cond_val;
    j["conditions"] = cond;
    if (res.cond_k3 && res.cond_kmod) {
        j["v_k3"] = res.v_k3;
        j["threshold"] = res.threshold.str();
        j["v_a2_kp"] = res.v_a2_kp;
    }
    j["precision_used"] = res.precision_used;
    return j;
}

// run tasks across a pool, emit results in input order
template <class T>
std::vector<T> fan_out(const std::vector<std::function<T()>>& tasks, int jobs) {
    std::vector<T> out(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> workers;
    std::exception_ptr first_error;
    std::mutex err_mx;
    for (int w = 0; w < jobs; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    out[i] = tasks[i]();
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mx);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        }));
    for (auto& f : workers) f.get();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

int exit_for(const std::exception& err) {
    if (dynamic_cast<const PrecisionError*>(&err)) return kExitPrecision;
    if (dynamic_cast<const DomainError*>(&err) || dynamic_cast<const HypothesisError*>(&err) ||
        dynamic_cast<const NonUnitError*>(&err) || dynamic_cast<const RingMismatch*>(&err) ||
        dynamic_cast<const SingularMatrix*>(&err) || dynamic_cast<const NonSquareCentre*>(&err))
        return kExitDomain;
    return kExitInternal; // IntegralityFailure, BranchMismatch, anything else
}

// ---- classify ----------------------------------------------------------

struct ClassifyArgs {
    long p = 0;
    std::string k;
    int e = 1;
    std::string unit = "1";
    int shift = 1;
};

int cmd_classify(const ClassifyArgs& a, const Common& c) {
    ASpec spec{a.p, a.e, parse_digits(a.unit), a.shift, c.precision};
    Int k(a.k);
    ClassificationResult res = classify(a.p, k, spec);
    std::cout << classification_json(a.p, k, res).dump() << "\n";
    return kExitOk;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::string statement;
    long p = 0;
    int r = 0;
    int e = 2;
    std::string unit;
    int shift = 1;
};

HeckeParams verify_params(const VerifyArgs& a, const Common& c) {
    if (a.unit.empty())
        throw CLI::ValidationError("--unit", "this statement needs an a-spec (--e/--unit/--shift)");
    return make_hecke_params(a.p, a.r, a.e, parse_digits(a.unit), a.shift, c.precision);
}

int cmd_verify(const VerifyArgs& a, const Common& c) {
    std::vector<std::function<CheckReport()>> tasks;
    if (!a.statement.empty()) {
        const std::string& s = a.statement;
        if (s == "check_binomial") tasks.push_back([&] { return check_binomial(a.p, a.r); });
        else if (s == "check_r_bound") tasks.push_back([&] { return check_r_bound(a.p, a.r); });
        else if (s == "check_first_congruence") tasks.push_back([&] { return check_first_congruence(a.p, a.r); });
        else if (s == "check_power_sums") tasks.push_back([&] { return check_power_sums(a.p, a.r); });
        else if (s == "check_sum_lx") tasks.push_back([&] { return check_sum_lx(a.p, a.r); });
        else if (s == "check_psi_elements") tasks.push_back([&] { return check_psi_elements(a.p, a.r); });
        else if (s == "check_T_symp2") tasks.push_back([&] { return check_T_symp2(a.p); });
        else if (s == "check_Tma_generator") tasks.push_back([&, hp = verify_params(a, c)] { return check_Tma_generator(hp); });
        else if (s == "check_Xg") tasks.push_back([&, hp = verify_params(a, c)] { return check_Xg(hp); });
        else if (s == "check_TmaX") tasks.push_back([&, hp = verify_params(a, c)] { return check_TmaX(hp); });
        else if (s == "check_theta_relation") tasks.push_back([&, hp = verify_params(a, c)] { return check_theta_relation(hp); });
        else throw CLI::ValidationError("--statement", "unknown statement id: " + s);
    } else if (a.suite == "section2" || a.suite == "section4" || a.suite == "all") {
        using Check2 = std::function<CheckReport(long, int)>;
        const std::vector<Check2> section2{
            [](long p, int r) { return check_binomial(p, r); }, check_r_bound,
            check_first_congruence, check_power_sums, check_sum_lx};
        if (a.suite != "section4")
            for (const Check2& fn : section2)
                tasks.push_back([fn, &a] { return fn(a.p, a.r); });
        if (a.suite != "section2") {
            HeckeParams hp = verify_params(a, c);
            tasks.push_back([&a] { return check_psi_elements(a.p, a.r); });
            tasks.push_back([&a] { return check_T_symp2(a.p); });
            tasks.push_back([hp] { return check_Tma_generator(hp); });
            tasks.push_back([hp] { return check_Xg(hp); });
            tasks.push_back([hp] { return check_TmaX(hp); });
            tasks.push_back([hp] { return check_theta_relation(hp); });
        }
    } else {
        throw CLI::ValidationError("--suite", "expected one of: section2, section4, all");
    }

    std::vector<CheckReport> reports = fan_out(tasks, c.jobs);
    bool all = true;
    for (const CheckReport& r : reports) {
        std::cout << report_json(r).dump() << "\n";
        all = all && r.pass;
    }
    return all ? kExitOk : kExitInternal;
}

// ---- sweep -------------------------------------------------------------

struct SweepArgs {
    long p = 0;
    std::string k;
    int e = 2;
    std::string units;  // semicolon-separated digit tuples, e.g. "1;2;4,3"
    std::string shifts = "1";
};

int cmd_sweep(const SweepArgs& a, const Common& c) {
    std::vector<ASpec> grid;
    std::stringstream us(a.units);
    std::string utok;
    std::vector<std::vector<Int>> unit_list;
    while (std::getline(us, utok, ';'))
        if (!utok.empty()) unit_list.push_back(parse_digits(utok));
    std::stringstream ss(a.shifts);
    std::string stok;
    std::vector<int> shift_list;
    while (std::getline(ss, stok, ','))
        if (!stok.empty()) shift_list.push_back(std::stoi(stok));
    for (const auto& u : unit_list)
        for (int s : shift_list) grid.push_back(ASpec{a.p, a.e, u, s, c.precision});

    Int k(a.k);
    std::vector<std::function<SweepRow()>> tasks;
    for (const ASpec& spec : grid)
        tasks.push_back([&a, spec, k] { return sweep(a.p, k, {spec})[0]; });
    std::vector<SweepRow> rows = fan_out(tasks, c.jobs);

    int n_red = 0, n_irr = 0, n_err = 0;
    auto row_json = [](const SweepRow& row) {
        ordered_json j;
        ordered_json aspec;
        ordered_json digits = ordered_json::array();
        for (const Int& d : row.a.digits) digits.push_back(d.str());
        aspec["unit"] = digits;
        aspec["shift"] = row.a.shift;
        aspec["e"] = row.a.e;
        j["a"] = aspec;
        if (row.result) {
            j["variant"] = row.result->reducible ? "reducible" : "irreducible";
            if (row.result->reducible) j["trace"] = row.result->trace;
            else j["t"] = row.result->t;
        } else {
            j["variant"] = "error";
            j["error"] = row.error;
        }
        return j;
    };
    if (c.format == "table") {
        std::cout << "unit\tshift\tvariant\tvalue\n";
        for (const SweepRow& row : rows) {
            std::string unit;
            for (size_t i = 0; i < row.a.digits.size(); ++i)
                unit += (i ? "," : "") + row.a.digits[i].str();
            std::cout << unit << "\t" << row.a.shift << "\t";
            if (row.result) {
                if (row.result->reducible) std::cout << "reducible\t" << row.result->trace;
                else std::cout << "irreducible\t" << row.result->t;
            } else {
                std::cout << "error\t" << row.error;
            }
            std::cout << "\n";
        }
    } else {
        for (const SweepRow& row : rows) std::cout << row_json(row).dump() << "\n";
    }
    for (const SweepRow& row : rows) {
        if (!row.result) ++n_err;
        else if (row.result->reducible) ++n_red;
        else ++n_irr;
    }
    ordered_json summary;
    summary["summary"] = {{"reducible", n_red}, {"irreducible", n_irr}, {"errors", n_err}};
    std::cout << summary.dump() << "\n";
    return kExitOk; // best-effort: per-point errors are flagged, not fatal
}

// ---- hecke -------------------------------------------------------------

struct HeckeArgs {
    long p = 0;
    int r = 0;
    int m = 0;
    std::string digits; // "pos:lam,pos:lam"
    std::string coeffs; // r+1 comma-separated F_p values, index i = y-degree
    int repeat = 1;
};

int cmd_hecke(const HeckeArgs& a, const Common&) {
    CanonCtx ctx{a.p, 48};
    CosetRep rep;
    rep.m = a.m;
    if (!a.digits.empty()) {
        std::stringstream ss(a.digits);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw DomainError("digit entries must look like pos:lambda");
            rep.digits[std::stoi(tok.substr(0, colon))] = std::stol(tok.substr(colon + 1));
        }
    }
    std::vector<FpElem> cs;
    {
        std::stringstream ss(a.coeffs);
        std::string tok;
        while (std::getline(ss, tok, ','))
            cs.emplace_back(a.p, std::stol(tok));
    }
    if (static_cast<int>(cs.size()) != a.r + 1)
        throw DomainError("expected " + std::to_string(a.r + 1) + " coefficients");

    auto E = InductionElement<FpElem>::zero(a.r, FpElem(a.p, 0));
    E.insert_term(rep_to_mat(rep, ctx), HomogPoly<FpElem>(a.r, cs), ctx);
    for (int i = 0; i < a.repeat; ++i) E = apply_T(E, ctx);

    ordered_json terms = ordered_json::array();
    for (const auto& [trep, v] : E.terms()) {
        ordered_json t;
        t["m"] = trep.m;
        ordered_json d = ordered_json::object();
        for (const auto& [pos, lam] : trep.digits) d[std::to_string(pos)] = lam;
        t["digits"] = d;
        ordered_json co = ordered_json::array();
        for (const FpElem& x : v.coeffs()) co.push_back(x.value());
        t["coeffs"] = co;
        terms.push_back(t);
    }
    ordered_json j;
    j["degree"] = a.r;
    j["terms"] = terms;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mod-p reduction of low-slope crystalline 2-dimensional "
                 "representations: classifier, verifier, and Hecke computations"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    Common cc;
    CLI::App* classify_cmd = app.add_subcommand("classify", "classify one (p, k, a) point");
    classify_cmd->add_option("--p", ca.p, "prime")->required();
    classify_cmd->add_option("--k", ca.k, "weight (arbitrary-size integer)")->required();
    classify_cmd->add_option("--e", ca.e, "ramification index of the ring of a");
    classify_cmd->add_option("--unit", ca.unit, "unit digits d0,d1,... of a");
    classify_cmd->add_option("--shift", ca.shift, "power of pi multiplying the unit");
    add_common(classify_cmd, cc);

    VerifyArgs va;
    Common vc;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification checks");
    verify_cmd->add_option("--suite", va.suite, "section2 | section4 | all");
    verify_cmd->add_option("--statement", va.statement, "single check by name");
    verify_cmd->add_option("--p", va.p, "prime")->required();
    verify_cmd->add_option("--r", va.r, "symmetric-power degree");
    verify_cmd->add_option("--e", va.e, "ramification index of the ring of a");
    verify_cmd->add_option("--unit", va.unit, "unit digits of a");
    verify_cmd->add_option("--shift", va.shift, "power of pi multiplying the unit");
    add_common(verify_cmd, vc);

    SweepArgs sa;
    Common sc;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "classify a grid of a values");
    sweep_cmd->add_option("--p", sa.p, "prime")->required();
    sweep_cmd->add_option("--k", sa.k, "weight")->required();
    sweep_cmd->add_option("--e", sa.e, "ramification index");
    sweep_cmd->add_option("--units", sa.units, "semicolon-separated digit tuples")->required();
    sweep_cmd->add_option("--shifts", sa.shifts, "comma-separated shifts");
    add_common(sweep_cmd, sc);

    HeckeArgs ha;
    Common hc;
    CLI::App* hecke_cmd = app.add_subcommand("hecke", "apply T to a symbol over F_p");
    hecke_cmd->add_option("--p", ha.p, "prime")->required();
    hecke_cmd->add_option("--r", ha.r, "polynomial degree")->required();
    hecke_cmd->add_option("--m", ha.m, "coset power of p");
    hecke_cmd->add_option("--digits", ha.digits, "coset digits pos:lambda,...");
    hecke_cmd->add_option("--coeffs", ha.coeffs, "r+1 coefficients, index i = y-degree")->required();
    hecke_cmd->add_option("--repeat", ha.repeat, "apply T this many times")->check(CLI::PositiveNumber);
    add_common(hecke_cmd, hc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            resolve_common(classify_cmd, cc);
            return cmd_classify(ca, cc);
        }
        if (verify_cmd->parsed()) {
            resolve_common(verify_cmd, vc);
            return cmd_verify(va, vc);
        }
        if (sweep_cmd->parsed()) {
            resolve_common(sweep_cmd, sc);
            return cmd_sweep(sa, sc);
        }
        if (hecke_cmd->parsed()) {
            resolve_common(hecke_cmd, hc);
            return cmd_hecke(ha, hc);
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_for(err);
    }
    return kExitUsage;
}
