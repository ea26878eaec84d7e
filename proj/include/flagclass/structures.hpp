#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagclass/chevalley.hpp"
#include "flagclass/ext_scalar.hpp"
#include "flagclass/flag.hpp"
#include "flagclass/linfeas.hpp"
#include "flagclass/rational.hpp"

namespace flagclass {

inline constexpr int kDefaultIacsCap = 20;
inline constexpr int kMaxMaskBits = 62;

/// Invariant almost complex structure: a sign per positive t-root. Bit k of
/// the mask set means eps_k = -1; mask 0 is all +1.
class IACS {
 public:
  IACS(int s, std::uint64_t mask);
  static IACS from_signs(const std::vector<int>& signs);

  int s() const { return s_; }
  std::uint64_t mask() const { return mask_; }
  /// eps of the k-th positive t-root.
  int sign(int k) const { return (mask_ >> k) & 1U ? -1 : 1; }
  /// eps of any t-root index of ts (negatives carry the opposite sign).
  int sign_at(const TRootSystem& ts, int t_index) const;
  std::vector<int> signs() const;
  IACS conjugate() const;
  std::string str() const;  // "(+1,+1,-1)"

  friend bool operator==(const IACS&, const IACS&) = default;

 private:
  int s_;
  std::uint64_t mask_;
};

/// Invariant metric: a strictly positive lambda per positive t-root.
class InvariantMetric {
 public:
  explicit InvariantMetric(std::vector<Rational> lambdas);
  static InvariantMetric normal(int s);

  int s() const { return static_cast<int>(lambdas_.size()); }
  const std::vector<Rational>& lambdas() const { return lambdas_; }
  const Rational& lambda(int k) const { return lambdas_[k]; }
  const Rational& lambda_at(const TRootSystem& ts, int t_index) const { return lambdas_[ts.class_of(t_index)]; }
  bool is_normal() const;
  std::string str() const;

  friend bool operator==(const InvariantMetric&, const InvariantMetric&) = default;

 private:
  std::vector<Rational> lambdas_;
};

/// 2^s; throws ErrorKind::CapExceeded when s > cap.
std::uint64_t iacs_count(const TRootSystem& ts, int cap = kDefaultIacsCap);
/// All 2^s structures in binary counting order (mask 0, 1, 2, ...).
std::vector<IACS> enumerate_iacs(const TRootSystem& ts, int cap = kDefaultIacsCap);

enum class TripleClass { ZeroThree, OneTwo };
const char* to_string(TripleClass c);

TripleClass classify_triple(const IACS& j, const TRootSystem& ts, const ZeroSumTriple& t);

/// eps_d eps_e + 1 - eps_{d+e} (eps_d + eps_e) = 0 for every pair of t-roots
/// (d = e allowed) whose sum is a t-root.
bool j_complex_test(const IACS& j, const TRootSystem& ts);
bool has_zero_three(const IACS& j, const TRootSystem& ts);
/// Runs both tests above; disagreement raises ErrorKind::InvariantViolation.
bool is_integrable(const IACS& j, const TRootSystem& ts);

/// Positive t-root indices lying in some (0,3)-triple of j.
std::vector<int> c_of_j(const IACS& j, const TRootSystem& ts);
/// Positive t-root indices lying in some zero-sum triple on which lambda is constant.
std::vector<int> c_of_g(const InvariantMetric& g, const TRootSystem& ts);
/// Direct test: lambda constant on every (0,3)-triple of j.
bool is_g1(const InvariantMetric& g, const IACS& j, const TRootSystem& ts);
/// Inclusion test C(J) subset of C(g).
bool g1_by_inclusion(const InvariantMetric& g, const IACS& j, const TRootSystem& ts);

/// Tensor-level checks on the Weyl basis of m, with root-level signs and
/// structure constants.
class RootLevelOracle {
 public:
  RootLevelOracle(const TRootSystem& ts, const StructureConstants& sc);

  /// Every coefficient n_{a,b} {eps_a eps_b + 1 - eps_{a+b}(eps_a + eps_b)}
  /// vanishes for a, b, a+b in R_M.
  bool integrable(const IACS& j) const;
  /// g(N(X_a,X_b),X_c) + g(N(X_c,X_b),X_a) vanishes for every zero-sum root
  /// triple a, b, c in R_M with a != c.
  bool g1(const InvariantMetric& g, const IACS& j) const;

  struct G1Term {
    ExtScalar coeff_c;  // multiplies lambda at t-class of c
    ExtScalar coeff_a;  // multiplies lambda at t-class of a
    int class_c;
    int class_a;
  };
  /// Nonzero symmetrized terms for a fixed j; the metric enters linearly.
  std::vector<G1Term> g1_terms(const IACS& j) const;
  static bool g1_terms_vanish(const std::vector<G1Term>& terms, const std::vector<Rational>& lambdas);

  std::size_t num_pairs() const { return pairs_.size(); }
  std::size_t num_triples() const { return triples_.size(); }

 private:
  struct Pair {
    int ta, tb, tsum;
    ExtScalar n;
  };
  struct Triple {
    int ta, tb, tc;
    ExtScalar n_ab, n_cb;
  };
  int eps(const IACS& j, int t) const { return j.sign(t < s_ ? t : t - s_) * (t < s_ ? 1 : -1); }
  static int nij_factor(int ea, int eb, int esum) { return ea * eb + 1 - esum * (ea + eb); }

  int s_;
  std::vector<Pair> pairs_;
  std::vector<Triple> triples_;
};

bool nijenhuis_oracle(const TRootSystem& ts, const StructureConstants& sc, const IACS& j);
bool g1_oracle(const TRootSystem& ts, const StructureConstants& sc, const InvariantMetric& g, const IACS& j);

/// eps_d lambda_d + eps_z lambda_z + eps_e lambda_e over the triple members.
Rational kahler_triple_sum(const InvariantMetric& g, const IACS& j, const TRootSystem& ts, const ZeroSumTriple& t);

struct MetricFeasibility {
  bool feasible = false;
  std::vector<Rational> sample;       // primitive integer lambda when feasible
  LinearSystem system;                // variables lambda_0..lambda_{s-1}
  std::vector<Rational> certificate;  // over system.constraints when infeasible
  bool decided_by_presolve = false;
};

/// lambda > 0 with the triple sum zero on every (1,2)-triple of j.
MetricFeasibility qk_feasibility(const IACS& j, const TRootSystem& ts);
/// lambda > 0 with the triple sum zero on every triple. A sign-definite
/// equation (a (0,3)-triple) is refuted directly when presolve is on.
MetricFeasibility ak_feasibility(const IACS& j, const TRootSystem& ts, bool presolve = true);

struct LabelSet {
  bool integrable = false;
  bool kahler = false;
  bool qk = false;
  bool g1 = false;

  std::vector<std::string> names() const;
  std::string str() const;
  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

/// Labels of (g, J). All triple sums vanishing on a non-integrable J raises
/// ErrorKind::InvariantViolation.
LabelSet classify_structure(const InvariantMetric& g, const IACS& j, const TRootSystem& ts);

struct ChamberSet {
  std::vector<IACS> chambers;                  // ascending by mask
  std::vector<std::vector<Rational>> samples;  // point of t (values on Sigma_M) in each chamber
  bool contains(std::uint64_t mask) const;
};

/// Sign vectors realized by a point of t off every t-root hyperplane.
ChamberSet t_chambers(const TRootSystem& ts);

struct PairCertificate {
  int from = 0;  // positive t-root indices
  int to = 0;
  TzsChain chain;
  std::vector<IACS> forcing;  // makes chain.triples[i] a (0,3)-triple
};

struct NormalMetricReport {
  bool holds = false;
  /// Classes joined by (0,3)-triples over the scanned structures.
  std::vector<std::vector<int>> components;
  std::uint64_t masks_scanned = 0;
  std::vector<PairCertificate> certificates;
  bool certificates_valid = false;
  std::string detail;
};

/// A structure whose (0,3)-triple makes t a (0,3)-triple.
IACS forcing_iacs(const TRootSystem& ts, const ZeroSumTriple& t);
/// Checks a certificate without trusting the producer.
std::optional<std::string> validate_certificate(const TRootSystem& ts, const PairCertificate& c);
NormalMetricReport normal_metric_unique(const TRootSystem& ts, int cap = kDefaultIacsCap);

struct LiftReport {
  bool holds = true;
  std::vector<ZeroSumTriple> unlifted;
};
/// Every zero-sum t-root triple is the image of a zero-sum root triple in R_M.
LiftReport check_triple_lifts(const TRootSystem& ts);

}  // namespace flagclass
