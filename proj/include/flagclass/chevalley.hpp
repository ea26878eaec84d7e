#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagclass/ext_scalar.hpp"
#include "flagclass/rootsys.hpp"

namespace flagclass {

/// Bracket coefficients [X_a, X_b] = n_{a,b} X_{a+b} on the Weyl basis
/// (B(X_a, X_{-a}) = 1), derived from a Chevalley basis whose extraspecial
/// pairs carry positive constants.
class StructureConstants {
 public:
  explicit StructureConstants(std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }

  /// Integer Chevalley constant N_{a,b} (0 when a+b is not a root).
  int chevalley(int a, int b) const { return chev_[at(a, b)]; }
  /// Weyl-normalized n_{a,b} (zero when a+b is not a root).
  const ExtScalar& weyl(int a, int b) const { return weyl_[at(a, b)]; }
  bool defined(int a, int b) const { return rs_->sum_index(a, b) >= 0; }

  /// Extraspecial pair (a, b) of each non-simple positive root, by root index.
  const std::vector<std::pair<int, int>>& extraspecial_pairs() const { return extraspecial_; }

  /// Copy with the single entry n_{a,b} negated; used for fault injection.
  StructureConstants with_flipped_entry(int a, int b) const;

 private:
  std::size_t at(int a, int b) const { return static_cast<std::size_t>(a) * rs_->size() + b; }

  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> chev_;
  std::vector<ExtScalar> weyl_;
  std::vector<std::pair<int, int>> extraspecial_;
};

StructureConstants compute_structure_constants(std::shared_ptr<const RootSystem> rs);

/// n_{a,b} for a+b a root, zero scalar when a+b is neither a root nor 0.
/// a+b = 0 lands in the Cartan subalgebra and is rejected.
ExtScalar bracket_coefficient(const StructureConstants& sc, const Root& a, const Root& b);

struct JacobiResult {
  bool holds = true;
  std::optional<std::array<int, 3>> counterexample;  // root indices
  std::string detail;
};

/// Checks [X_a,[X_b,X_c]] + cyclic = 0 (Cartan parts included) on every root
/// triple where some pairwise sum lies in R or is 0.
JacobiResult verify_jacobi(const StructureConstants& sc);

struct TableCheck {
  bool holds = true;
  std::string detail;  // first violation
};

/// Antisymmetry, n_{-a,-b} = -n_{a,b}, cyclic identity on zero-sum triples,
/// n_{a,b} = -n_{c,b} on zero-sum triples, and
/// n_{a,b}^2 = (p+1)^2 (a,a)(b,b) / (2 (a+b,a+b)).
TableCheck check_table_invariants(const StructureConstants& sc);

}  // namespace flagclass
