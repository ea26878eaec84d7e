#include "flagclass/linfeas.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "flagclass/error.hpp"

namespace flagclass {

void LinearSystem::add(std::vector<Rational> coeffs, Relation rel, Rational constant) {
  if (static_cast<int>(coeffs.size()) != num_vars) throw Error(ErrorKind::DimensionMismatch, "constraint length mismatch");
  constraints.push_back(Constraint{std::move(coeffs), constant, rel});
}

namespace {

struct Row {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
  std::vector<Rational> mult;  // over original constraints
};

void axpy(Row& dst, const Rational& k, const Row& src) {
  for (std::size_t i = 0; i < dst.a.size(); ++i)
    if (!src.a[i].is_zero()) dst.a[i] += k * src.a[i];
  dst.b += k * src.b;
  for (std::size_t i = 0; i < dst.mult.size(); ++i)
    if (!src.mult[i].is_zero()) dst.mult[i] += k * src.mult[i];
}

void scale(Row& r, const Rational& k) {
  for (auto& x : r.a) x *= k;
  r.b *= k;
  for (auto& x : r.mult) x *= k;
}

// Positive rescaling so that the coefficient part is a primitive integer vector.
void normalize(Row& r) {
  std::int64_t l = 1;
  for (const auto& x : r.a) l = std::lcm(l, x.den());
  l = std::lcm(l, r.b.den());
  std::int64_t g = 0;
  for (const auto& x : r.a) g = std::gcd(g, (x * Rational(l)).num());
  g = std::gcd(g, (r.b * Rational(l)).num());
  if (g == 0) return;
  scale(r, Rational(l, g));
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

struct Bound {
  Rational value;
  bool strict;
};

Rational choose_value(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
  auto ok_lo = [&](const Rational& v) { return !lo || (lo->strict ? v > lo->value : v >= lo->value); };
  auto ok_hi = [&](const Rational& v) { return !hi || (hi->strict ? v < hi->value : v <= hi->value); };
  if (lo) {
    std::int64_t f = lo->value.floor();
    Rational cand = lo->strict || !lo->value.is_integer() ? Rational(f + 1) : lo->value;
    if (ok_hi(cand)) return cand;
  }
  if (hi) {
    Rational hv = hi->value;
    std::int64_t f = hv.floor();
    Rational cand = (hi->strict && hv.is_integer()) ? Rational(f - 1) : Rational(f);
    if (ok_lo(cand)) return cand;
  }
  if (lo && hi) return (lo->value + hi->value) / Rational(2);
  return Rational(0);
}

}  // namespace

FeasibilityResult solve_feasibility(const LinearSystem& sys) {
  const int n = sys.num_vars;
  const std::size_t m = sys.constraints.size();
  std::vector<Row> eqs;
  std::vector<Row> ineqs;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = sys.constraints[i];
    if (static_cast<int>(c.coeffs.size()) != n) throw Error(ErrorKind::DimensionMismatch, "constraint length mismatch");
    Row r{c.coeffs, c.constant, c.rel == Relation::Greater, std::vector<Rational>(m, Rational(0))};
    r.mult[i] = 1;
    (c.rel == Relation::Equal ? eqs : ineqs).push_back(std::move(r));
  }

  FeasibilityResult result;
  auto infeasible = [&](const Row& r) {
    result.feasible = false;
    result.certificate = r.mult;
    return result;
  };

  // Gauss-Jordan on equalities; pivot on the highest-index variable.
  std::vector<std::pair<int, Row>> pivots;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Row& row = eqs[e];
    int p = -1;
    for (int v = n - 1; v >= 0; --v)
      if (!row.a[v].is_zero()) {
        p = v;
        break;
      }
    if (p < 0) {
      if (!row.b.is_zero()) return infeasible(row);
      continue;
    }
    scale(row, row.a[p].inverse());
    for (std::size_t o = e + 1; o < eqs.size(); ++o)
      if (!eqs[o].a[p].is_zero()) axpy(eqs[o], -eqs[o].a[p], row);
    for (auto& [q, prow] : pivots)
      if (!prow.a[p].is_zero()) axpy(prow, -prow.a[p], row);
    for (auto& in : ineqs)
      if (!in.a[p].is_zero()) axpy(in, -in.a[p], row);
    pivots.emplace_back(p, row);
  }
  std::vector<bool> is_pivot(n, false);
  for (const auto& [p, r] : pivots) is_pivot[p] = true;

  // Fourier-Motzkin, highest free variable first.
  std::vector<std::pair<int, std::vector<Row>>> stages;  // var -> rows mentioning it at that stage
  std::vector<Row> work;
  for (auto& r : ineqs) {
    normalize(r);
    work.push_back(std::move(r));
  }
  auto dedupe = [](std::vector<Row>& rows) {
    std::map<std::pair<std::vector<Rational>, Rational>, std::size_t> seen;
    std::vector<Row> out;
    for (auto& r : rows) {
      if (all_zero(r.a) && (r.b > Rational(0) || (r.b.is_zero() && !r.strict))) continue;  // trivially true
      auto key = std::make_pair(r.a, r.b);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(std::move(key), out.size());
        out.push_back(std::move(r));
      } else if (r.strict && !out[it->second].strict) {
        out[it->second] = std::move(r);
      }
    }
    rows = std::move(out);
  };
  dedupe(work);
  for (int v = n - 1; v >= 0; --v) {
    if (is_pivot[v]) continue;
    std::vector<Row> pos, neg, rest;
    for (auto& r : work) {
      int sg = r.a[v].sign();
      (sg > 0 ? pos : (sg < 0 ? neg : rest)).push_back(std::move(r));
    }
    std::vector<Row> stage_rows;
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row c = p;
        scale(c, -q.a[v]);
        axpy(c, p.a[v], q);
        c.a[v] = 0;
        c.strict = p.strict || q.strict;
        normalize(c);
        rest.push_back(std::move(c));
      }
    stage_rows.insert(stage_rows.end(), pos.begin(), pos.end());
    stage_rows.insert(stage_rows.end(), neg.begin(), neg.end());
    stages.emplace_back(v, std::move(stage_rows));
    dedupe(rest);
    work = std::move(rest);
  }
  for (const auto& r : work) {
    // all coefficients are zero now
    if (r.b < Rational(0) || (r.b.is_zero() && r.strict)) return infeasible(r);
  }

  // Back-substitution in ascending variable order.
  std::vector<Rational> x(n, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    int v = it->first;
    std::optional<Bound> lo, hi;
    for (const auto& r : it->second) {
      Rational rest = r.b;
      for (int k = 0; k < n; ++k)
        if (k != v && !r.a[k].is_zero()) rest += r.a[k] * x[k];
      Rational bound = -rest / r.a[v];
      if (r.a[v] > Rational(0)) {
        if (!lo || bound > lo->value || (bound == lo->value && r.strict)) lo = Bound{bound, r.strict};
      } else {
        if (!hi || bound < hi->value || (bound == hi->value && r.strict)) hi = Bound{bound, r.strict};
      }
    }
    x[v] = choose_value(lo, hi);
  }
  for (const auto& [p, r] : pivots) {
    Rational val = -r.b;
    for (int k = 0; k < n; ++k)
      if (k != p && !r.a[k].is_zero()) val -= r.a[k] * x[k];
    x[p] = val;
  }
  if (!satisfies(sys, x)) throw Error(ErrorKind::InvariantViolation, "Fourier-Motzkin back-substitution failed");
  result.feasible = true;
  result.solution = std::move(x);
  return result;
}

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != sys.num_vars) return false;
  for (const auto& c : sys.constraints) {
    Rational v = c.constant;
    for (int k = 0; k < sys.num_vars; ++k) v += c.coeffs[k] * x[k];
    switch (c.rel) {
      case Relation::Equal:
        if (!v.is_zero()) return false;
        break;
      case Relation::Greater:
        if (!(v > Rational(0))) return false;
        break;
      case Relation::GreaterEqual:
        if (v < Rational(0)) return false;
        break;
    }
  }
  return true;
}

bool certifies_infeasible(const LinearSystem& sys, const std::vector<Rational>& y) {
  if (y.size() != sys.constraints.size()) return false;
  std::vector<Rational> comb(sys.num_vars, Rational(0));
  Rational constant(0);
  bool strict_used = false;
  bool any = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) continue;
    const auto& c = sys.constraints[i];
    if (c.rel != Relation::Equal && y[i] < Rational(0)) return false;
    any = true;
    if (c.rel == Relation::Greater) strict_used = true;
    for (int k = 0; k < sys.num_vars; ++k) comb[k] += y[i] * c.coeffs[k];
    constant += y[i] * c.constant;
  }
  if (!any || !all_zero(comb)) return false;
  // The combination reads 0 (rel) constant-free: `constant` must violate the implied relation.
  bool only_equalities = true;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!y[i].is_zero() && sys.constraints[i].rel != Relation::Equal) only_equalities = false;
  if (only_equalities) return !constant.is_zero();
  return strict_used ? constant <= Rational(0) : constant < Rational(0);
}

std::vector<Rational> primitive_integer_multiple(const std::vector<Rational>& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = std::lcm(l, x.den());
  std::int64_t g = 0;
  for (const auto& x : v) g = std::gcd(g, (x * Rational(l)).num());
  if (g == 0) return v;
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(x * Rational(l, g));
  return out;
}

}  // namespace flagclass
