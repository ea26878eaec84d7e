#include <random>

#include "doctest.h"
#include "flagclass/linfeas.hpp"

using namespace flagclass;

namespace {

bool holds(const Constraint& c, const std::vector<Rational>& x) {
  Rational v = c.constant;
  for (std::size_t i = 0; i < x.size(); ++i) v += c.coeffs[i] * x[i];
  switch (c.rel) {
    case Relation::Equal: return v.is_zero();
    case Relation::Greater: return v.sign() > 0;
    case Relation::GreaterEqual: return v.sign() >= 0;
  }
  return false;
}

// Farkas check written out independently of the library.
bool refutes(const LinearSystem& sys, const std::vector<Rational>& y) {
  if (y.size() != sys.constraints.size()) return false;
  std::vector<Rational> comb(sys.num_vars);
  Rational constant;
  bool strict = false, only_equalities = true;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Constraint& c = sys.constraints[i];
    if (y[i].is_zero()) continue;
    if (c.rel != Relation::Equal) {
      if (y[i].sign() < 0) return false;
      only_equalities = false;
      strict = strict || c.rel == Relation::Greater;
    }
    for (int v = 0; v < sys.num_vars; ++v) comb[v] += y[i] * c.coeffs[v];
    constant += y[i] * c.constant;
  }
  for (const auto& x : comb)
    if (!x.is_zero()) return false;
  if (only_equalities) return !constant.is_zero();
  return constant.sign() < 0 || (constant.is_zero() && strict);
}

}  // namespace

TEST_CASE("small feasible and infeasible systems") {
  LinearSystem a;
  a.num_vars = 2;
  a.add({1, 0}, Relation::Greater);
  a.add({0, 1}, Relation::Greater);
  a.add({1, 1}, Relation::Equal, -3);
  FeasibilityResult ra = solve_feasibility(a);
  REQUIRE(ra.feasible);
  for (const auto& c : a.constraints) CHECK(holds(c, ra.solution));

  LinearSystem b;
  b.num_vars = 2;
  b.add({1, 0}, Relation::Greater);
  b.add({0, 1}, Relation::Greater);
  b.add({1, 1}, Relation::Equal);
  FeasibilityResult rb = solve_feasibility(b);
  CHECK_FALSE(rb.feasible);
  CHECK(refutes(b, rb.certificate));
  CHECK(certifies_infeasible(b, rb.certificate));
}

TEST_CASE("random systems are decided with checkable evidence") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), nvars(1, 4), ncons(1, 6), rel(0, 2);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    LinearSystem sys;
    sys.num_vars = nvars(rng);
    int m = ncons(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> c(sys.num_vars);
      for (auto& x : c) x = coef(rng);
      sys.add(std::move(c), static_cast<Relation>(rel(rng)), coef(rng));
    }
    FeasibilityResult r = solve_feasibility(sys);
    if (r.feasible) {
      ++feasible;
      for (const auto& c : sys.constraints) CHECK(holds(c, r.solution));
    } else {
      ++infeasible;
      CHECK(refutes(sys, r.certificate));
    }
  }
  CHECK(feasible > 100);
  CHECK(infeasible > 100);
}

TEST_CASE("primitive integer multiple") {
  auto v = primitive_integer_multiple({Rational(1, 2), Rational(3, 4), Rational(0)});
  CHECK(v == std::vector<Rational>{2, 3, 0});
}
