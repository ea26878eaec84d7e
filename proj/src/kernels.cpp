#include "flagclass/kernels.hpp"

#include <algorithm>

#include "flagclass/error.hpp"

namespace flagclass {

CensusContext::CensusContext(const TRootSystem& ts, const StructureConstants& sc)
    : ts_(&ts), oracle_(ts, sc), chambers_(t_chambers(ts)) {}

namespace {

template <class T>
void keep_min(std::optional<T>& a, const std::optional<T>& b) {
  if (b && (!a || *b < *a)) a = b;
}

// Sign-definite equation of the first (0,3)-triple, or false when none exists.
bool ak_refutation(const IACS& j, const TRootSystem& ts) {
  for (const auto& t : ts.triples()) {
    int e0 = j.sign_at(ts, t.members[0]);
    if (j.sign_at(ts, t.members[1]) != e0 || j.sign_at(ts, t.members[2]) != e0) continue;
    int cls[3], coeff[3];
    int n = 0;
    for (int m : t.members) {
      int c = ts.class_of(m), e = j.sign_at(ts, m);
      int k = 0;
      while (k < n && cls[k] != c) ++k;
      if (k == n) {
        cls[n] = c;
        coeff[n++] = 0;
      }
      coeff[k] += e;
    }
    bool pos = true, neg = true;
    for (int k = 0; k < n; ++k) {
      pos = pos && coeff[k] > 0;
      neg = neg && coeff[k] < 0;
    }
    return pos || neg;
  }
  return false;
}

void census_one(const CensusContext& ctx, std::uint64_t mask, IntegrabilityCensus& acc) {
  const TRootSystem& ts = ctx.t_roots();
  IACS j(ts.s(), mask);
  bool a = j_complex_test(j, ts);
  bool b = !has_zero_three(j, ts);
  bool c = ctx.oracle().integrable(j);
  bool d = ctx.chambers().contains(mask);
  ++acc.total;
  acc.j_complex += a;
  acc.zero_three_free += b;
  acc.nijenhuis += c;
  acc.in_chambers += d;
  if (!(a == b && b == c && c == d)) {
    ++acc.disagreements;
    keep_min(acc.first_disagreement, std::optional<std::uint64_t>(mask));
  }
  if (!b) {
    if (ak_refutation(j, ts)) {
      ++acc.ak_refuted;
    } else {
      ++acc.ak_violations;
      keep_min(acc.first_ak_violation, std::optional<std::uint64_t>(mask));
    }
  }
}

}  // namespace

void IntegrabilityCensus::merge(const IntegrabilityCensus& o) {
  total += o.total;
  j_complex += o.j_complex;
  zero_three_free += o.zero_three_free;
  nijenhuis += o.nijenhuis;
  in_chambers += o.in_chambers;
  disagreements += o.disagreements;
  keep_min(first_disagreement, o.first_disagreement);
  ak_refuted += o.ak_refuted;
  ak_violations += o.ak_violations;
  keep_min(first_ak_violation, o.first_ak_violation);
}

IntegrabilityCensus integrability_census_serial(const CensusContext& ctx, std::uint64_t begin, std::uint64_t end) {
  IntegrabilityCensus acc;
  for (std::uint64_t m = begin; m < end; ++m) census_one(ctx, m, acc);
  return acc;
}

IntegrabilityCensus integrability_census_parallel(const CensusContext& ctx, std::uint64_t begin, std::uint64_t end) {
  IntegrabilityCensus total;
#pragma omp parallel
  {
    IntegrabilityCensus local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t m = static_cast<std::int64_t>(begin); m < static_cast<std::int64_t>(end); ++m)
      census_one(ctx, static_cast<std::uint64_t>(m), local);
#pragma omp critical(flagclass_census_merge)
    total.merge(local);
  }
  return total;
}

void G1Census::merge(const G1Census& o) {
  pairs += o.pairs;
  g1 += o.g1;
  disagreements += o.disagreements;
  keep_min(first_disagreement, o.first_disagreement);
  inclusion_disagreements += o.inclusion_disagreements;
  keep_min(first_inclusion_disagreement, o.first_inclusion_disagreement);
}

std::uint64_t grid_size(int s, std::size_t values) {
  std::uint64_t n = 1;
  for (int k = 0; k < s; ++k) {
    if (n > (std::uint64_t{1} << 40) / values) throw Error(ErrorKind::CapExceeded, "metric grid too large");
    n *= values;
  }
  return n;
}

InvariantMetric grid_metric(int s, const std::vector<int>& values, std::uint64_t i) {
  std::vector<Rational> l(s);
  for (int k = 0; k < s; ++k) {
    l[k] = Rational(values[i % values.size()]);
    i /= values.size();
  }
  return InvariantMetric(std::move(l));
}

namespace {

void g1_one(const CensusContext& ctx, std::uint64_t mask, const std::vector<InvariantMetric>& grid, G1Census& acc) {
  const TRootSystem& ts = ctx.t_roots();
  IACS j(ts.s(), mask);
  auto terms = ctx.oracle().g1_terms(j);
  for (std::uint64_t i = 0; i < grid.size(); ++i) {
    bool direct = is_g1(grid[i], j, ts);
    bool tensor = RootLevelOracle::g1_terms_vanish(terms, grid[i].lambdas());
    bool inclusion = g1_by_inclusion(grid[i], j, ts);
    ++acc.pairs;
    acc.g1 += direct;
    if (direct != tensor) {
      ++acc.disagreements;
      keep_min(acc.first_disagreement, std::optional<std::pair<std::uint64_t, std::uint64_t>>({mask, i}));
    }
    if (direct != inclusion) {
      ++acc.inclusion_disagreements;
      keep_min(acc.first_inclusion_disagreement, std::optional<std::pair<std::uint64_t, std::uint64_t>>({mask, i}));
    }
  }
}

std::vector<InvariantMetric> make_grid(int s, const std::vector<int>& values) {
  std::vector<InvariantMetric> grid;
  std::uint64_t n = grid_size(s, values.size());
  grid.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) grid.push_back(grid_metric(s, values, i));
  return grid;
}

}  // namespace

G1Census g1_census_serial(const CensusContext& ctx, const std::vector<int>& values) {
  const int s = ctx.t_roots().s();
  auto grid = make_grid(s, values);
  const std::uint64_t n = iacs_count(ctx.t_roots(), kMaxMaskBits);
  G1Census acc;
  for (std::uint64_t m = 0; m < n; ++m) g1_one(ctx, m, grid, acc);
  return acc;
}

G1Census g1_census_parallel(const CensusContext& ctx, const std::vector<int>& values) {
  const int s = ctx.t_roots().s();
  auto grid = make_grid(s, values);
  const std::int64_t n = static_cast<std::int64_t>(iacs_count(ctx.t_roots(), kMaxMaskBits));
  G1Census total;
#pragma omp parallel
  {
    G1Census local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t m = 0; m < n; ++m) g1_one(ctx, static_cast<std::uint64_t>(m), grid, local);
#pragma omp critical(flagclass_g1_merge)
    total.merge(local);
  }
  return total;
}

}  // namespace flagclass
