#pragma once

#include <string>
#include <vector>

#include "crysred/hecke.hpp"

namespace crysred {

// One executable predicate per verified statement: pass/fail plus a
// counterexample witness for the first failing instance.
struct CheckReport {
    std::string statement;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::string witness; // empty iff pass
    int branch = 0;      // check_theta_relation only: matched branch (1 or 2)
    long ms = 0;
};

// Dropping one displayed block from a transcribed right-hand side; used by
// the mutation tests to guard against vacuously-true comparisons.
constexpr int kNoMutation = -1;

CheckReport check_binomial(long p, int r, int n_max = 0);
CheckReport check_r_bound(long p, int r);
CheckReport check_first_congruence(long p, int r);
CheckReport check_power_sums(long p, int r);
CheckReport check_sum_lx(long p, int r);

CheckReport check_psi_elements(long p, int r);
CheckReport check_T_symp2(long p, int drop_block = kNoMutation);
CheckReport check_Tma_generator(const HeckeParams& hp, int drop_block = kNoMutation);
CheckReport check_Xg(const HeckeParams& hp, int drop_block = kNoMutation);
CheckReport check_TmaX(const HeckeParams& hp, int drop_block = kNoMutation);
CheckReport check_theta_relation(const HeckeParams& hp, int drop_block = kNoMutation);

// a = (digit polynomial in pi) * pi^shift at absolute precision P pi-digits;
// P = 0 means the default e*(v_p(r-1) + 4).
RamifiedElement make_ram_a(long p, int e, const std::vector<Int>& unit_digits, int shift, int P);

HeckeParams make_hecke_params(long p, int r, int e, const std::vector<Int>& unit_digits,
                              int shift, int precision = 0);

std::vector<CheckReport> run_section2_suite(long p, int r);
std::vector<CheckReport> run_section4_suite(const HeckeParams& hp);

} // namespace crysred
