#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "flagclass/rootsys.hpp"

namespace flagclass {

/// Finite set of nonzero integer functionals closed under negation. Vectors
/// keep the order they were given in; +/- classes are numbered by first
/// appearance and represented by their member whose first nonzero entry is
/// positive.
class FunctionalSet {
 public:
  explicit FunctionalSet(std::vector<Coords> vectors);
  static FunctionalSet from_roots(const RootSystem& rs);

  int size() const { return static_cast<int>(vectors_.size()); }
  int dim() const { return vectors_.empty() ? 0 : static_cast<int>(vectors_.front().size()); }
  const Coords& operator[](int i) const { return vectors_[i]; }
  const std::vector<Coords>& vectors() const { return vectors_; }
  std::optional<int> index_of(const Coords& c) const;
  int negation(int i) const { return negation_[i]; }

  int num_classes() const { return static_cast<int>(class_rep_.size()); }
  int class_of(int i) const { return class_of_[i]; }
  /// Index of the representative (positive) member of a class.
  int class_representative(int cls) const { return class_rep_[cls]; }

 private:
  std::vector<Coords> vectors_;
  std::unordered_map<Coords, int, CoordsHash> index_;
  std::vector<int> negation_;
  std::vector<int> class_of_;
  std::vector<int> class_rep_;
};

/// Multiset {a, b, c} of set indices with a + b + c = 0, stored sorted.
struct ZeroSumTriple {
  std::array<int, 3> members{};

  bool contains_class(const FunctionalSet& s, int cls) const;
  friend bool operator==(const ZeroSumTriple&, const ZeroSumTriple&) = default;
  friend auto operator<=>(const ZeroSumTriple&, const ZeroSumTriple&) = default;
};

/// All zero-sum multisets, deduplicated up to permutation, in lexicographic
/// order of their sorted index tuples.
std::vector<ZeroSumTriple> zero_sum_triples(const FunctionalSet& s);

struct TzsChain {
  std::vector<ZeroSumTriple> triples;
  int from = -1;  // set indices of the endpoints
  int to = -1;
};

/// Independent re-validation of a chain; returns an explanation on failure.
std::optional<std::string> validate_chain(const FunctionalSet& s, const TzsChain& chain);

struct ConnectivityReport {
  bool connected = false;
  /// Components as lists of class ids (ascending), ordered by smallest id.
  std::vector<std::vector<int>> components;
  std::vector<ZeroSumTriple> triples;
  /// For a connected set, a shortest chain from class 0 to every other class.
  std::vector<TzsChain> witnesses;
};

ConnectivityReport connectivity(const FunctionalSet& s);

/// Shortest chain (hop count) between a and b, a != +/-b. Throws
/// ErrorKind::Disconnected if their classes lie in different components.
TzsChain chain_between(const FunctionalSet& s, const Coords& a, const Coords& b);

/// Triple-hypergraph adjacency reused by repeated chain queries.
class TripleGraph {
 public:
  TripleGraph(const FunctionalSet& s, std::vector<ZeroSumTriple> triples);
  const std::vector<ZeroSumTriple>& triples() const { return triples_; }
  TzsChain shortest_chain(int from_index, int to_index) const;

 private:
  const FunctionalSet* set_;
  std::vector<ZeroSumTriple> triples_;
  std::vector<std::vector<int>> by_class_;  // class -> triple ids
};

nlohmann::ordered_json to_json(const FunctionalSet& s, const ZeroSumTriple& t);
nlohmann::ordered_json to_json(const FunctionalSet& s, const TzsChain& chain);
nlohmann::ordered_json to_json(const FunctionalSet& s, const ConnectivityReport& report);

}  // namespace flagclass
