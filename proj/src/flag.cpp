#include "flagclass/flag.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "flagclass/error.hpp"

namespace flagclass {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

bool canonical_less(const Coords& a, const Coords& b) {
  int ha = 0, hb = 0;
  for (int x : a) ha += x;
  for (int x : b) hb += x;
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

// ---------------------------------------------------------------- FlagSpec

FlagSpec::FlagSpec(std::shared_ptr<const RootSystem> rs, std::vector<int> theta)
    : rs_(std::move(rs)), theta_(std::move(theta)) {
  const int n = rs_->rank();
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
  for (int i : theta_)
    if (i < 1 || i > n)
      throw Error(ErrorKind::IndexOutOfRange, "theta index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  if (static_cast<int>(theta_.size()) == n)
    throw Error(ErrorKind::NotAFlagManifold, "theta equals the whole simple system: not a flag manifold");
  for (int i = 1; i <= n; ++i)
    if (!theta_contains(i)) sigma_m_.push_back(i);
  in_r_m_.assign(rs_->size(), false);
  for (int r = 0; r < rs_->size(); ++r) {
    const Root& root = rs_->root(r);
    bool inside = true;
    for (int i : sigma_m_)
      if (root[i - 1] != 0) inside = false;
    if (inside) {
      r_theta_.push_back(r);
    } else {
      r_m_.push_back(r);
      in_r_m_[r] = true;
    }
  }
}

bool FlagSpec::theta_contains(int simple) const {
  return std::binary_search(theta_.begin(), theta_.end(), simple);
}

FlagSpec FlagSpec::parse(std::string_view text) {
  auto space = text.find(' ');
  std::string_view type_part = text.substr(0, space);
  std::vector<int> theta;
  if (space != std::string_view::npos) {
    std::string_view rest = text.substr(space + 1);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    constexpr std::string_view key = "theta=";
    if (rest.substr(0, key.size()) != key)
      throw Error(ErrorKind::InvalidArgument, "expected 'theta=' in flag text '" + std::string(text) + "'");
    rest.remove_prefix(key.size());
    std::string item;
    std::istringstream is{std::string(rest)};
    while (std::getline(is, item, ',')) {
      if (item.empty()) continue;
      try {
        theta.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "bad theta index '" + item + "'");
      }
    }
  }
  auto rs = std::make_shared<const RootSystem>(LieType::parse(type_part));
  return FlagSpec(std::move(rs), std::move(theta));
}

std::string FlagSpec::str() const { return rs_->lie_type().str() + " theta=" + join(theta_, ","); }

std::string FlagSpec::painted() const { return rs_->lie_type().str() + " : paint " + join(sigma_m_, ","); }

std::string FlagSpec::file_stem() const {
  return rs_->lie_type().str() + "_theta_" + (theta_.empty() ? std::string("none") : join(theta_, "_"));
}

FlagSpec make_flag(std::shared_ptr<const RootSystem> rs, std::vector<int> theta) {
  return FlagSpec(std::move(rs), std::move(theta));
}

FlagSpec make_flag_from_paint(std::shared_ptr<const RootSystem> rs, const std::vector<int>& painted) {
  std::vector<int> theta;
  for (int i : painted)
    if (i < 1 || i > rs->rank())
      throw Error(ErrorKind::IndexOutOfRange, "painted index " + std::to_string(i) + " out of range");
  for (int i = 1; i <= rs->rank(); ++i)
    if (std::find(painted.begin(), painted.end(), i) == painted.end()) theta.push_back(i);
  return FlagSpec(std::move(rs), std::move(theta));
}

std::vector<FlagSpec> all_flags(std::shared_ptr<const RootSystem> rs) {
  std::vector<FlagSpec> out;
  const int n = rs->rank();
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) theta.push_back(i + 1);
    out.emplace_back(rs, std::move(theta));
  }
  return out;
}

// ---------------------------------------------------------------- TRoot

bool TRoot::is_positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int x) { return x > 0; });
}

int TRoot::height() const {
  int h = 0;
  for (int x : coords) h += x;
  return h;
}

TRoot TRoot::operator-() const {
  TRoot t{coords};
  for (int& x : t.coords) x = -x;
  return t;
}

std::string TRoot::str() const {
  return "(" + join(coords, ",") + ")";
}

TRoot t_projection(const FlagSpec& f, const Root& a) {
  const RootSystem& rs = f.root_system();
  auto idx = rs.index_of(a);
  if (!idx) throw Error(ErrorKind::NotARoot, a.str() + " is not a root");
  if (!f.in_r_m(*idx)) throw Error(ErrorKind::RootInTheta, a.str() + " lies in R_Theta; k(a) = 0 is not a t-root");
  TRoot t;
  for (int i : f.sigma_m()) t.coords.push_back(a[i - 1]);
  return t;
}

// ---------------------------------------------------------------- TRootSystem

namespace {

std::vector<TRoot> collect_t_roots(const FlagSpec& f) {
  std::vector<Coords> pos;
  const RootSystem& rs = f.root_system();
  for (int r : f.r_m()) {
    if (r >= rs.num_positive()) continue;
    Coords c = t_projection(f, rs.root(r)).coords;
    if (std::find(pos.begin(), pos.end(), c) == pos.end()) pos.push_back(std::move(c));
  }
  std::sort(pos.begin(), pos.end(), canonical_less);
  std::vector<TRoot> out;
  for (auto& c : pos) out.push_back(TRoot{c});
  const std::size_t s = out.size();
  for (std::size_t i = 0; i < s; ++i) out.push_back(-out[i]);
  return out;
}

std::vector<Coords> coords_of(const std::vector<TRoot>& t) {
  std::vector<Coords> out;
  for (const auto& x : t) out.push_back(x.coords);
  return out;
}

}  // namespace

TRootSystem::TRootSystem(FlagSpec flag)
    : flag_(std::move(flag)), t_roots_(collect_t_roots(flag_)), functionals_(coords_of(t_roots_)) {
  s_ = static_cast<int>(t_roots_.size() / 2);
  const RootSystem& rs = flag_.root_system();
  fibers_.assign(size(), {});
  root_to_t_.assign(rs.size(), -1);
  for (int r : flag_.r_m()) {
    int t = *functionals_.index_of(t_projection(flag_, rs.root(r)).coords);
    fibers_[t].push_back(r);
    root_to_t_[r] = t;
  }
  sum_.assign(static_cast<std::size_t>(size()) * size(), -1);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      Coords c = t_roots_[i].coords;
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += t_roots_[j].coords[k];
      if (auto idx = functionals_.index_of(c)) sum_[static_cast<std::size_t>(i) * size() + j] = *idx;
    }
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j)
      if (int k = sum_index(i, j); k >= 0) sum_pairs_.push_back({i, j, k});
  triples_ = zero_sum_triples(functionals_);
}

std::optional<int> TRootSystem::index_of(const TRoot& t) const { return functionals_.index_of(t.coords); }

TRootSystem build_t_roots(const FlagSpec& f) { return TRootSystem(f); }

// ---------------------------------------------------------------- bridges

std::vector<std::vector<int>> sigma_m_components(const FlagSpec& f) {
  auto adj = dynkin_neighbors(f.root_system());
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(f.root_system().rank() + 1, false);
  for (int start : f.sigma_m()) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> q{start};
    seen[start] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      comp.push_back(u);
      for (int v0 : adj[u - 1]) {
        int v = v0 + 1;
        if (!seen[v] && !f.theta_contains(v)) {
          seen[v] = true;
          q.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// Diagram path from any node of `from` to any node of `to` whose interior lies in Theta.
std::optional<std::vector<int>> theta_path(const FlagSpec& f, const std::vector<int>& from, const std::vector<int>& to) {
  auto adj = dynkin_neighbors(f.root_system());
  const int n = f.root_system().rank();
  std::vector<int> parent(n + 1, -2);
  std::deque<int> q;
  for (int u : from) {
    parent[u] = -1;
    q.push_back(u);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v0 : adj[u - 1]) {
      int v = v0 + 1;
      if (parent[v] != -2) continue;
      if (std::find(to.begin(), to.end(), v) != to.end()) {
        std::vector<int> path{v};
        for (int w = u; w >= 0; w = parent[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!f.theta_contains(v)) continue;
      parent[v] = u;
      q.push_back(v);
    }
  }
  return std::nullopt;
}

Bridge extend_along(const FlagSpec& f, const std::vector<int>& path) {
  const RootSystem& rs = f.root_system();
  Bridge b;
  b.path = path;
  b.alpha1 = path.front();
  b.alpha2 = path.back();
  b.phi = Root(Coords(rs.rank(), 0));
  Root acc = rs.simple_root(path.front());
  for (std::size_t k = 1; k < path.size(); ++k) {
    acc = acc + rs.simple_root(path[k]);
    if (!rs.contains(acc)) throw Error(ErrorKind::InvariantViolation, "chain extension left the root system at " + acc.str());
    if (k + 1 < path.size()) b.phi = b.phi + rs.simple_root(path[k]);
  }
  auto idx = rs.index_of(acc);
  if (!f.in_r_m(*idx)) throw Error(ErrorKind::InvariantViolation, "bridge root not complementary");
  if (!b.phi.is_zero() && !rs.contains(b.phi))
    throw Error(ErrorKind::InvariantViolation, "bridge middle part " + b.phi.str() + " is not in R_Theta");
  b.beta = acc;
  return b;
}

}  // namespace

Bridge bridge_root(const FlagSpec& f, int d1, int d2) {
  auto comps = sigma_m_components(f);
  if (comps.size() < 2) throw Error(ErrorKind::BridgeUnavailable, "the diagram of Sigma_M is connected; no bridge needed");
  const int n = static_cast<int>(comps.size());
  if (d1 < 1 || d1 > n || d2 < 1 || d2 > n) throw Error(ErrorKind::IndexOutOfRange, "component index out of range");
  if (d1 == d2) throw Error(ErrorKind::InvalidArgument, "bridge needs two distinct components");
  auto path = theta_path(f, comps[d1 - 1], comps[d2 - 1]);
  if (!path) throw Error(ErrorKind::BridgeUnavailable, "no Theta-path between the two components");
  return extend_along(f, *path);
}

Bridge bridge_between(const FlagSpec& f, int i, int j) {
  if (f.theta_contains(i) || f.theta_contains(j)) throw Error(ErrorKind::InvalidArgument, "bridge endpoints must be painted nodes");
  if (i == j) throw Error(ErrorKind::InvalidArgument, "bridge needs two distinct nodes");
  auto path = theta_path(f, {i}, {j});
  if (!path) throw Error(ErrorKind::BridgeUnavailable, "no Theta-path between the two nodes");
  return extend_along(f, *path);
}

}  // namespace flagclass
