#include "flagclass/tzs.hpp"

#include <algorithm>
#include <deque>

#include "flagclass/error.hpp"

namespace flagclass {

namespace {

Coords negated(const Coords& c) {
  Coords r(c);
  for (int& x : r) x = -x;
  return r;
}

bool leading_positive(const Coords& c) {
  for (int x : c)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

FunctionalSet::FunctionalSet(std::vector<Coords> vectors) : vectors_(std::move(vectors)) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const Coords& v = vectors_[i];
    if (v.size() != vectors_.front().size()) throw Error(ErrorKind::DimensionMismatch, "functionals of mixed length");
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
      throw Error(ErrorKind::InvalidArgument, "functional set contains 0");
    if (!index_.emplace(v, static_cast<int>(i)).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate functional in set");
  }
  negation_.resize(vectors_.size());
  class_of_.assign(vectors_.size(), -1);
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    auto it = index_.find(negated(vectors_[i]));
    if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, "functional set is not closed under negation");
    negation_[i] = it->second;
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (class_of_[i] >= 0) continue;
    int cls = static_cast<int>(class_rep_.size());
    int rep = leading_positive(vectors_[i]) ? static_cast<int>(i) : negation_[i];
    class_rep_.push_back(rep);
    class_of_[i] = cls;
    class_of_[negation_[i]] = cls;
  }
}

FunctionalSet FunctionalSet::from_roots(const RootSystem& rs) {
  std::vector<Coords> v;
  v.reserve(rs.size());
  for (const Root& r : rs.roots()) v.push_back(r.coords());
  return FunctionalSet(std::move(v));
}

std::optional<int> FunctionalSet::index_of(const Coords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ZeroSumTriple::contains_class(const FunctionalSet& s, int cls) const {
  return std::any_of(members.begin(), members.end(), [&](int m) { return s.class_of(m) == cls; });
}

std::vector<ZeroSumTriple> zero_sum_triples(const FunctionalSet& s) {
  std::vector<ZeroSumTriple> out;
  const int n = s.size();
  const int d = s.dim();
  Coords target(d);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < d; ++k) target[k] = -(s[i][k] + s[j][k]);
      auto c = s.index_of(target);
      if (c && *c >= j) out.push_back(ZeroSumTriple{{i, j, *c}});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> validate_chain(const FunctionalSet& s, const TzsChain& chain) {
  if (chain.triples.empty()) return "empty chain";
  const int d = s.dim();
  for (const auto& t : chain.triples) {
    for (int k = 0; k < d; ++k)
      if (s[t.members[0]][k] + s[t.members[1]][k] + s[t.members[2]][k] != 0) return "triple does not sum to zero";
  }
  if (!chain.triples.front().contains_class(s, s.class_of(chain.from))) return "first triple misses the start class";
  if (!chain.triples.back().contains_class(s, s.class_of(chain.to))) return "last triple misses the end class";
  for (std::size_t p = 0; p + 1 < chain.triples.size(); ++p) {
    bool meet = false;
    for (int m : chain.triples[p].members)
      if (chain.triples[p + 1].contains_class(s, s.class_of(m))) meet = true;
    if (!meet) return "consecutive triples " + std::to_string(p) + " and " + std::to_string(p + 1) + " do not intersect";
  }
  return std::nullopt;
}

TripleGraph::TripleGraph(const FunctionalSet& s, std::vector<ZeroSumTriple> triples)
    : set_(&s), triples_(std::move(triples)), by_class_(s.num_classes()) {
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    for (int m : triples_[t].members) {
      auto& list = by_class_[s.class_of(m)];
      if (list.empty() || list.back() != static_cast<int>(t)) list.push_back(static_cast<int>(t));
    }
  }
}

TzsChain TripleGraph::shortest_chain(int from_index, int to_index) const {
  const FunctionalSet& s = *set_;
  const int from_cls = s.class_of(from_index);
  const int to_cls = s.class_of(to_index);
  if (from_cls == to_cls) throw Error(ErrorKind::InvalidArgument, "chain endpoints must satisfy a != +/-b");
  std::vector<int> parent(triples_.size(), -2);
  std::deque<int> queue;
  for (int t : by_class_[from_cls]) {
    parent[t] = -1;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    if (triples_[t].contains_class(s, to_cls)) {
      TzsChain chain;
      chain.from = from_index;
      chain.to = to_index;
      for (int u = t; u >= 0; u = parent[u]) chain.triples.push_back(triples_[u]);
      std::reverse(chain.triples.begin(), chain.triples.end());
      if (auto why = validate_chain(s, chain)) throw Error(ErrorKind::InvariantViolation, "invalid tzs chain: " + *why);
      return chain;
    }
    for (int m : triples_[t].members)
      for (int u : by_class_[s.class_of(m)])
        if (parent[u] == -2) {
          parent[u] = t;
          queue.push_back(u);
        }
  }
  throw Error(ErrorKind::Disconnected, "no tzs chain between the given functionals");
}

ConnectivityReport connectivity(const FunctionalSet& s) {
  ConnectivityReport report;
  report.triples = zero_sum_triples(s);
  const int nc = s.num_classes();
  std::vector<int> comp(nc, -1);
  std::vector<std::vector<int>> adj(nc);
  for (const auto& t : report.triples)
    for (int a : t.members)
      for (int b : t.members) {
        int ca = s.class_of(a), cb = s.class_of(b);
        if (ca != cb) adj[ca].push_back(cb);
      }
  for (int c = 0; c < nc; ++c) {
    if (comp[c] >= 0) continue;
    int id = static_cast<int>(report.components.size());
    report.components.emplace_back();
    std::deque<int> q{c};
    comp[c] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      report.components[id].push_back(u);
      for (int v : adj[u])
        if (comp[v] < 0) {
          comp[v] = id;
          q.push_back(v);
        }
    }
    std::sort(report.components[id].begin(), report.components[id].end());
  }
  report.connected = report.components.size() <= 1;
  if (report.connected && nc > 1) {
    TripleGraph graph(s, report.triples);
    for (int c = 1; c < nc; ++c)
      report.witnesses.push_back(graph.shortest_chain(s.class_representative(0), s.class_representative(c)));
  }
  return report;
}

TzsChain chain_between(const FunctionalSet& s, const Coords& a, const Coords& b) {
  auto ia = s.index_of(a);
  auto ib = s.index_of(b);
  if (!ia || !ib) throw Error(ErrorKind::InvalidArgument, "chain endpoints must belong to the set");
  TripleGraph graph(s, zero_sum_triples(s));
  return graph.shortest_chain(*ia, *ib);
}

namespace {

nlohmann::ordered_json coords_json(const Coords& c) { return nlohmann::ordered_json(c); }

}  // namespace

nlohmann::ordered_json to_json(const FunctionalSet& s, const ZeroSumTriple& t) {
  auto arr = nlohmann::ordered_json::array();
  for (int m : t.members) arr.push_back(coords_json(s[m]));
  return arr;
}

nlohmann::ordered_json to_json(const FunctionalSet& s, const TzsChain& chain) {
  nlohmann::ordered_json j;
  j["from"] = coords_json(s[chain.from]);
  j["to"] = coords_json(s[chain.to]);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& t : chain.triples) arr.push_back(to_json(s, t));
  j["triples"] = std::move(arr);
  return j;
}

nlohmann::ordered_json to_json(const FunctionalSet& s, const ConnectivityReport& report) {
  nlohmann::ordered_json j;
  j["connected"] = report.connected;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& comp : report.components) {
    auto c = nlohmann::ordered_json::array();
    for (int cls : comp) c.push_back(coords_json(s[s.class_representative(cls)]));
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  auto triples = nlohmann::ordered_json::array();
  for (const auto& t : report.triples) triples.push_back(to_json(s, t));
  j["triples"] = std::move(triples);
  auto wit = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) wit.push_back(to_json(s, w));
  j["witnesses"] = std::move(wit);
  return j;
}

}  // namespace flagclass
