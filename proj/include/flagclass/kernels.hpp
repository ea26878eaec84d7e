#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagclass/chevalley.hpp"
#include "flagclass/flag.hpp"
#include "flagclass/structures.hpp"

namespace flagclass {

/// Everything the per-structure sweeps need for one flag, built once.
class CensusContext {
 public:
  CensusContext(const TRootSystem& ts, const StructureConstants& sc);

  const TRootSystem& t_roots() const { return *ts_; }
  const RootLevelOracle& oracle() const { return oracle_; }
  const ChamberSet& chambers() const { return chambers_; }

 private:
  const TRootSystem* ts_;
  RootLevelOracle oracle_;
  ChamberSet chambers_;
};

struct IntegrabilityCensus {
  std::uint64_t total = 0;
  std::uint64_t j_complex = 0;        // pairwise sign test
  std::uint64_t zero_three_free = 0;  // no (0,3)-triple
  std::uint64_t nijenhuis = 0;        // structure-constant tensor vanishes
  std::uint64_t in_chambers = 0;      // realized by a t-chamber
  std::uint64_t disagreements = 0;
  std::optional<std::uint64_t> first_disagreement;  // smallest mask
  /// Structures with a (0,3)-triple whose all-triples Kahler system was
  /// refuted by a sign-definite equation.
  std::uint64_t ak_refuted = 0;
  std::uint64_t ak_violations = 0;
  std::optional<std::uint64_t> first_ak_violation;

  void merge(const IntegrabilityCensus& o);
  friend bool operator==(const IntegrabilityCensus&, const IntegrabilityCensus&) = default;
};

/// Four integrability tests and the AK refutation on every mask in [begin, end).
IntegrabilityCensus integrability_census_serial(const CensusContext& ctx, std::uint64_t begin, std::uint64_t end);
IntegrabilityCensus integrability_census_parallel(const CensusContext& ctx, std::uint64_t begin, std::uint64_t end);

struct G1Census {
  std::uint64_t pairs = 0;  // (iacs, metric) pairs checked
  std::uint64_t g1 = 0;
  std::uint64_t disagreements = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_disagreement;  // (mask, metric index)
  /// Direct test vs the inclusion test C(J) subset of C(g).
  std::uint64_t inclusion_disagreements = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_inclusion_disagreement;

  void merge(const G1Census& o);
  friend bool operator==(const G1Census&, const G1Census&) = default;
};

/// Metric with index i in the grid values^s (first t-root varies fastest).
InvariantMetric grid_metric(int s, const std::vector<int>& values, std::uint64_t i);
std::uint64_t grid_size(int s, std::size_t values);

/// is_g1 against the tensor oracle over every mask and every grid metric.
G1Census g1_census_serial(const CensusContext& ctx, const std::vector<int>& values);
G1Census g1_census_parallel(const CensusContext& ctx, const std::vector<int>& values);

}  // namespace flagclass
