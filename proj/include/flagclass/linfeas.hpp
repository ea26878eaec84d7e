#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagclass/rational.hpp"

namespace flagclass {

enum class Relation { Equal, Greater, GreaterEqual };

/// coeffs . x + constant  (rel)  0
struct Constraint {
  std::vector<Rational> coeffs;
  Rational constant;
  Relation rel = Relation::Greater;
};

struct LinearSystem {
  int num_vars = 0;
  std::vector<Constraint> constraints;

  void add(std::vector<Rational> coeffs, Relation rel, Rational constant = Rational(0));
};

struct FeasibilityResult {
  bool feasible = false;
  /// A point satisfying every constraint (feasible case).
  std::vector<Rational> solution;
  /// Multipliers over the constraints, nonnegative on inequalities, whose
  /// combination cancels every variable and leaves a false constant relation
  /// (infeasible case).
  std::vector<Rational> certificate;
};

/// Exact feasibility by Gauss-Jordan elimination of the equalities followed
/// by Fourier-Motzkin elimination of the inequalities, with back-substitution
/// that prefers small integer values.
FeasibilityResult solve_feasibility(const LinearSystem& sys);

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x);
/// Checks a certificate independently of the solver.
bool certifies_infeasible(const LinearSystem& sys, const std::vector<Rational>& y);

/// Scales a rational vector by a positive factor to a primitive integer vector.
std::vector<Rational> primitive_integer_multiple(const std::vector<Rational>& v);

}  // namespace flagclass
