#pragma once

// Reference values and brute-force recomputations used only by the tests.
// Nothing here calls the library code it is checking.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "flagclass/flag.hpp"

namespace oracle {

using flagclass::Coords;
using flagclass::Family;
using flagclass::LieType;

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline std::int64_t root_count(const LieType& t) {
  const std::int64_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

inline std::uint64_t weyl_order(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

/// Weyl group order of an irreducible system from its rank and root count.
inline std::uint64_t weyl_order_from_counts(int rank, std::int64_t roots) {
  const std::int64_t r = rank;
  if (roots == r * (r + 1)) return factorial(rank + 1);
  if (roots == 2 * r * r) return (std::uint64_t{1} << rank) * factorial(rank);
  if (roots == 2 * r * (r - 1)) return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
  if (rank == 2 && roots == 12) return 12;
  if (rank == 4 && roots == 48) return 1152;
  if (rank == 6 && roots == 72) return 51840;
  if (rank == 7 && roots == 126) return 2903040;
  return 0;
}

inline bool supported_on(const Coords& c, const std::vector<int>& nodes) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0 && std::find(nodes.begin(), nodes.end(), static_cast<int>(i + 1)) == nodes.end()) return false;
  return true;
}

/// |W_Theta|: split Theta into connected pieces of the root support graph and
/// multiply the Weyl orders of the pieces.
inline std::uint64_t weyl_theta_order(const flagclass::FlagSpec& f) {
  const auto& rs = f.root_system();
  std::vector<int> theta = f.theta();
  std::vector<int> comp(rs.rank() + 1, -1);
  int ncomp = 0;
  for (int a : theta) {
    if (comp[a] >= 0) continue;
    std::vector<int> stack{a};
    comp[a] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int b : theta) {
        if (comp[b] >= 0) continue;
        Coords sum(rs.rank(), 0);
        sum[x - 1] = 1;
        sum[b - 1] = 1;
        if (rs.index_of(sum)) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
      }
    }
    ++ncomp;
  }
  std::uint64_t order = 1;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int a : theta)
      if (comp[a] == c) nodes.push_back(a);
    std::int64_t roots = 0;
    for (const auto& r : rs.roots()) roots += supported_on(r.coords(), nodes);
    order *= weyl_order_from_counts(static_cast<int>(nodes.size()), roots);
  }
  return order;
}

/// Number of positive t-roots: distinct restrictions to the painted nodes of
/// the positive roots not supported on Theta.
inline int positive_t_root_count(const flagclass::FlagSpec& f) {
  std::set<Coords> seen;
  for (const auto& r : f.root_system().roots()) {
    if (!r.is_positive() || supported_on(r.coords(), f.theta())) continue;
    Coords k;
    for (int i : f.sigma_m()) k.push_back(r[i - 1]);
    seen.insert(k);
  }
  return static_cast<int>(seen.size());
}

/// (p, q) of the a-string through b, walking coordinates directly.
inline std::pair<int, int> root_string(const flagclass::RootSystem& rs, const Coords& a, const Coords& b) {
  auto shifted = [&](int k) {
    Coords c(b);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += k * a[i];
    return c;
  };
  int p = 0, q = 0;
  while (rs.index_of(shifted(-(p + 1)))) ++p;
  while (rs.index_of(shifted(q + 1))) ++q;
  return {p, q};
}

/// Every multiset {a, b, c} of vectors from the list with a + b + c = 0, by
/// brute force over index triples i <= j <= k.
inline std::size_t zero_sum_triple_count(const std::vector<Coords>& v) {
  std::set<std::vector<Coords>> found;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        bool zero = true;
        for (std::size_t d = 0; d < v[i].size(); ++d) zero = zero && v[i][d] + v[j][d] + v[k][d] == 0;
        if (!zero) continue;
        std::vector<Coords> t{v[i], v[j], v[k]};
        std::sort(t.begin(), t.end());
        found.insert(t);
      }
  return found.size();
}

}  // namespace oracle
