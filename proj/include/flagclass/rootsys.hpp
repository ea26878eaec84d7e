#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagclass/rational.hpp"

namespace flagclass {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Validating constructor; rank bounds are A>=1, B>=2, C>=3, D>=4, E6-8, F4, G2.
  static LieType make(Family family, int rank);
  /// Parses "A3", "e6", ... (case-insensitive family letter).
  static LieType parse(std::string_view text);

  std::string str() const;
  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Every valid simple type with rank in [1, max_rank], in family order.
std::vector<LieType> all_types_up_to(int max_rank);

/// Number of roots for the type (closed forms, independent of construction).
std::int64_t closed_form_root_count(LieType t);

/// Coefficients of a root over the simple roots.
using Coords = std::vector<int>;

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : c) h = (h ^ static_cast<std::size_t>(x + 1024)) * 0x100000001b3ull;
    return h;
  }
};

class Root {
 public:
  Root() = default;
  explicit Root(Coords coords) : coords_(std::move(coords)) {}

  const Coords& coords() const { return coords_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }
  int height() const;
  bool is_positive() const;
  bool is_zero() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& a);
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  std::string str() const;

 private:
  Coords coords_;
};

/// Irreducible root system in Bourbaki numbering with long roots of squared
/// length 2. Roots are indexed 0..2N-1: positive roots first in canonical
/// order (height, then simple-root coefficients with earlier simple roots
/// weighing more), followed by their negatives in the same order, so that
/// index(-r) = index(r) +/- N.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  LieType lie_type() const { return type_; }
  int rank() const { return type_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return size() / 2; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int index) const { return roots_[index]; }
  /// Simple root alpha_i, i in 1..rank.
  const Root& simple_root(int i) const;
  int simple_index(int i) const { return i - 1; }

  std::optional<int> index_of(const Coords& c) const;
  std::optional<int> index_of(const Root& r) const { return index_of(r.coords()); }
  bool contains(const Root& r) const { return index_of(r).has_value(); }
  int negation(int index) const { return index < num_positive() ? index + num_positive() : index - num_positive(); }
  /// Index of root(i)+root(j), or -1 when the sum is not a root.
  int sum_index(int i, int j) const { return sum_table_[static_cast<std::size_t>(i) * size() + j]; }

  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  Rational inner_product(const Root& a, const Root& b) const;
  Rational inner_product(int i, int j) const { return inner_product(roots_[i], roots_[j]); }
  Rational norm2(int index) const { return norms_[index]; }

  /// Integer 2(b,a)/(a,a).
  int cartan_integer(const Root& b, const Root& a) const;
  /// (p, q): the a-string through b is b - p a, ..., b + q a. Requires b != +/-a.
  std::pair<int, int> root_string(const Root& a, const Root& b) const;
  /// s_i(b) for the simple root alpha_i, i in 1..rank.
  Root simple_reflection(int i, const Root& b) const;
  /// s_a(b) for an arbitrary root a.
  Root reflect(const Root& a, const Root& b) const;

 private:
  const Root& checked(const Root& r, const char* what) const;

  LieType type_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Root> roots_;
  std::vector<Rational> norms_;
  std::unordered_map<Coords, int, CoordsHash> index_;
  std::vector<int> sum_table_;
};

RootSystem build_root_system(LieType type);

/// Simple-root Gram matrix in Bourbaki numbering.
std::vector<std::vector<Rational>> bourbaki_gram(LieType type);

/// Adjacency of the Dynkin diagram (nonzero off-diagonal gram entries), 0-based.
std::vector<std::vector<int>> dynkin_neighbors(const RootSystem& rs);

}  // namespace flagclass
