#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagclass/report.hpp"

namespace flagclass {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string summary;
  Json counterexample;  // null when passed
  double seconds = 0;

  Json to_json() const;
};

/// R is tzs-connected for every simple type of rank <= max_rank, and shortest
/// chains between pairs_per_type random root pairs validate.
CheckResult check_tzs_roots(int max_rank, int pairs_per_type, std::uint64_t seed);
/// R_t is tzs-connected for every flag of rank <= max_rank.
CheckResult check_tzs_t_roots(int max_rank);
/// Exactly 2^s distinct structures per flag.
CheckResult check_iacs_counts(int max_rank, int iacs_cap);

struct IntegrabilityChecks {
  CheckResult four_way;
  CheckResult ak_equals_k;
};
/// Four-way integrability agreement and AK = K over every structure of every
/// flag of rank <= max_rank. The Kahler systems of flags with s <= full_fm_max_s
/// are also solved by plain Fourier-Motzkin without presolve.
IntegrabilityChecks check_integrability(int max_rank, int iacs_cap, bool parallel, int full_fm_max_s);

/// s = 1 flags: both structures integrable, every probe pair G1.
CheckResult check_isotropy_irreducible(int max_rank);
/// R_t = {+-d, +-2d}: eps_d = -1, eps_2d = +1 is not integrable.
CheckResult check_two_summand(int max_rank);
/// Normal metric is the only metric G1 for every structure, with certificates.
CheckResult check_normal_metric(int max_rank, int iacs_cap);
/// is_g1 equals the tensor oracle over every structure and grid metric.
CheckResult check_g1_oracle(int max_rank, const std::vector<int>& values, bool parallel);
/// Jacobi identity and table invariants. With inject_fault the A2 table gets
/// one flipped sign and the check is expected to fail.
CheckResult check_chevalley(int max_rank, bool inject_fault = false);
/// Group orders against the type formulas.
CheckResult check_weyl_orders(int max_rank, std::uint64_t weyl_cap);
/// omega in A_Theta iff omega(R_M) in R_M, and the action is well defined.
CheckResult check_a_theta(int max_rank, std::uint64_t weyl_cap);
/// Label sets constant along A_Theta orbits of (J, g), g over the grid.
CheckResult check_orbit_labels(int max_rank, const std::vector<int>& values, std::uint64_t weyl_cap);
/// The A2 full flag numbers end to end.
CheckResult check_a2_end_to_end();
/// Every zero-sum t-root triple lifts to a zero-sum root triple.
CheckResult check_triple_lifts(int max_rank);

struct SuiteOptions {
  int max_rank = 4;
  int iacs_cap = 24;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  bool parallel = true;
  bool inject_fault = false;
  std::uint64_t seed = 1;
};

std::vector<CheckResult> run_suite(const SuiteOptions& opt);

}  // namespace flagclass
