#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagclass/rootsys.hpp"
#include "flagclass/tzs.hpp"

namespace flagclass {

/// Painted Dynkin diagram: a root system together with Theta, the white
/// (unpainted) simple roots. Simple-root indices are 1-based Bourbaki.
class FlagSpec {
 public:
  FlagSpec(std::shared_ptr<const RootSystem> rs, std::vector<int> theta);

  /// "A3 theta=2,3"; an empty list is the full flag.
  static FlagSpec parse(std::string_view text);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  const std::vector<int>& theta() const { return theta_; }
  /// Simple roots outside Theta (the painted nodes), ascending.
  const std::vector<int>& sigma_m() const { return sigma_m_; }
  bool theta_contains(int simple) const;

  /// Root indices in canonical root order.
  const std::vector<int>& r_theta() const { return r_theta_; }
  const std::vector<int>& r_m() const { return r_m_; }
  bool in_r_m(int root_index) const { return in_r_m_[root_index]; }

  std::string str() const;      // "A3 theta=2,3"
  std::string painted() const;  // "A3 : paint 1"
  /// File-name stem "<TYPE><rank>_theta_<i>_<j>" ("..._theta_none" for the full flag).
  std::string file_stem() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> theta_;
  std::vector<int> sigma_m_;
  std::vector<int> r_theta_;
  std::vector<int> r_m_;
  std::vector<bool> in_r_m_;
};

FlagSpec make_flag(std::shared_ptr<const RootSystem> rs, std::vector<int> theta);
/// Flag from the painted (black) nodes; Theta is their complement.
FlagSpec make_flag_from_paint(std::shared_ptr<const RootSystem> rs, const std::vector<int>& painted);
/// Every Theta strictly contained in the simple roots, ordered by bitmask.
std::vector<FlagSpec> all_flags(std::shared_ptr<const RootSystem> rs);

/// Restriction of a root to t: its coefficients on Sigma_M.
struct TRoot {
  Coords coords;

  bool is_positive() const;
  int height() const;
  TRoot operator-() const;
  friend bool operator==(const TRoot&, const TRoot&) = default;
  std::string str() const;
};

/// k(a) for a root a in R_M; throws ErrorKind::RootInTheta for a in R_Theta.
TRoot t_projection(const FlagSpec& f, const Root& a);

/// t-roots of a flag. Index space: positive t-roots 0..s-1 in canonical order
/// (height, then earlier simple roots weighing more), negatives s..2s-1 with
/// index(-d) = index(d) + s.
class TRootSystem {
 public:
  explicit TRootSystem(FlagSpec flag);

  const FlagSpec& flag() const { return flag_; }
  const RootSystem& root_system() const { return flag_.root_system(); }
  int s() const { return s_; }
  int size() const { return 2 * s_; }

  const TRoot& t_root(int i) const { return t_roots_[i]; }
  const std::vector<TRoot>& t_roots() const { return t_roots_; }
  std::vector<TRoot> positive() const { return {t_roots_.begin(), t_roots_.begin() + s_}; }
  std::optional<int> index_of(const TRoot& t) const;
  int negation(int i) const { return i < s_ ? i + s_ : i - s_; }
  /// Positive representative and sign: t-root i equals sign * positive(class_of(i)).
  int class_of(int i) const { return i < s_ ? i : i - s_; }
  int sign_of(int i) const { return i < s_ ? 1 : -1; }
  /// Index of t_root(i) + t_root(j), or -1.
  int sum_index(int i, int j) const { return sum_[static_cast<std::size_t>(i) * size() + j]; }
  /// Every (i, j, i+j) with i <= j and i+j a t-root.
  const std::vector<std::array<int, 3>>& sum_pairs() const { return sum_pairs_; }

  /// Roots of R_M with k(root) = t_root(i), by root index.
  const std::vector<int>& fiber(int i) const { return fibers_[i]; }
  int summand_dim(int i) const { return static_cast<int>(fibers_[i].size()); }
  /// t-root index of a root in R_M (-1 on R_Theta).
  int t_index_of_root(int root_index) const { return root_to_t_[root_index]; }

  const FunctionalSet& functionals() const { return functionals_; }
  /// Zero-sum triples of t-roots as t-root indices (multisets, sorted).
  const std::vector<ZeroSumTriple>& triples() const { return triples_; }

 private:
  FlagSpec flag_;
  int s_ = 0;
  std::vector<TRoot> t_roots_;
  std::vector<std::vector<int>> fibers_;
  std::vector<int> root_to_t_;
  std::vector<int> sum_;
  std::vector<std::array<int, 3>> sum_pairs_;
  FunctionalSet functionals_;
  std::vector<ZeroSumTriple> triples_;
};

TRootSystem build_t_roots(const FlagSpec& f);

struct Bridge {
  Root beta;
  int alpha1 = 0;          // simple-root index in the first component
  int alpha2 = 0;          // simple-root index in the second component
  Root phi;                // element of R_Theta, or zero
  std::vector<int> path;   // simple roots added in order: alpha1, phi_1..phi_k, alpha2
};

/// Connected components of the Dynkin diagram of Sigma_M, each ascending,
/// ordered by smallest node.
std::vector<std::vector<int>> sigma_m_components(const FlagSpec& f);

/// Root alpha1 + phi + alpha2 joining components d1 and d2 (1-based) of
/// Sigma_M through Theta nodes, built by extending the chain one simple root
/// at a time with membership checked at every step.
Bridge bridge_root(const FlagSpec& f, int d1, int d2);

/// Same construction between two painted simple roots i, j whose diagram path
/// runs through Theta only; adjacent nodes give phi = 0.
Bridge bridge_between(const FlagSpec& f, int i, int j);

}  // namespace flagclass
