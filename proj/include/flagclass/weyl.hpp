#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "flagclass/flag.hpp"
#include "flagclass/rootsys.hpp"
#include "flagclass/structures.hpp"

namespace flagclass {

inline constexpr std::uint64_t kDefaultWeylCap = 1000000;

/// Weyl group element as a permutation of root indices.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}
  static WeylElement identity(int n);
  static WeylElement simple_reflection(const RootSystem& rs, int i);  // 1-based

  int operator()(int root_index) const { return perm_[root_index]; }
  const std::vector<int>& perm() const { return perm_; }
  /// (this * other)(r) = this(other(r))
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;
  bool is_identity() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
};

class WeylGroup {
 public:
  WeylGroup(std::shared_ptr<const RootSystem> rs, std::vector<WeylElement> elements, std::vector<WeylElement> gens,
            std::vector<int> word_length);

  const RootSystem& root_system() const { return *rs_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& generators() const { return gens_; }
  int word_length(std::size_t i) const { return word_length_[i]; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<WeylElement> elements_;
  std::vector<WeylElement> gens_;
  std::vector<int> word_length_;
};

/// |W| for a simple type.
std::uint64_t weyl_order(const LieType& t);

/// Breadth-first closure over the simple reflections: elements ordered by word
/// length, then by the generator sequence that first reaches them. Throws
/// ErrorKind::CapExceeded naming the order when it exceeds cap.
WeylGroup generate_weyl(std::shared_ptr<const RootSystem> rs, std::uint64_t cap = kDefaultWeylCap);

bool preserves_set(const WeylElement& w, const std::vector<int>& roots, const std::vector<bool>& member);
bool in_a_theta(const WeylElement& w, const FlagSpec& f);

struct AThetaResult {
  std::vector<std::size_t> members;  // indices into the group
  /// omega(R_M) subset of R_M exactly for the members.
  bool r_m_criterion_holds = true;
  std::optional<std::size_t> counterexample;
};

AThetaResult a_theta(const WeylGroup& w, const FlagSpec& f);

IACS act_on_iacs(const WeylElement& w, const TRootSystem& ts, const IACS& j);
InvariantMetric act_on_metric(const WeylElement& w, const TRootSystem& ts, const InvariantMetric& g);
/// (omega . J, omega . g). Throws ErrorKind::NotInStabilizer when omega is
/// not in A_Theta and ErrorKind::InvariantViolation when two roots of one
/// fiber land in different t-roots.
std::pair<IACS, InvariantMetric> act_on_structure(const WeylElement& w, const TRootSystem& ts, const IACS& j,
                                                  const InvariantMetric& g);

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // sorted members, ordered by representative
  std::vector<int> orbit_of;             // structure index -> orbit index
  std::vector<int> representatives;      // smallest member of each orbit
  std::vector<std::size_t> sizes() const;
};

/// Orbits of a list of structures closed under the given elements; throws
/// ErrorKind::NotClosedUnderAction when an image falls outside the list.
OrbitPartition orbits(const std::vector<WeylElement>& group, const TRootSystem& ts,
                      const std::vector<std::pair<IACS, InvariantMetric>>& structures);

}  // namespace flagclass
