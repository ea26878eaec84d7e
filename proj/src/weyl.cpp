#include "flagclass/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "flagclass/error.hpp"

namespace flagclass {

WeylElement WeylElement::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  std::vector<int> p(rs.size());
  for (int r = 0; r < rs.size(); ++r) p[r] = *rs.index_of(rs.simple_reflection(i, rs.root(r)));
  return WeylElement(std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  std::vector<int> p(other.perm_.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[r] = perm_[other.perm_[r]];
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[perm_[r]] = static_cast<int>(r);
  return WeylElement(std::move(p));
}

bool WeylElement::is_identity() const {
  for (std::size_t r = 0; r < perm_.size(); ++r)
    if (perm_[r] != static_cast<int>(r)) return false;
  return true;
}

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs, std::vector<WeylElement> elements,
                     std::vector<WeylElement> gens, std::vector<int> word_length)
    : rs_(std::move(rs)), elements_(std::move(elements)), gens_(std::move(gens)), word_length_(std::move(word_length)) {}

std::uint64_t weyl_order(const LieType& t) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  throw Error(ErrorKind::InvalidLieType, "unknown family");
}

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<int>& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

WeylGroup generate_weyl(std::shared_ptr<const RootSystem> rs, std::uint64_t cap) {
  const std::uint64_t projected = weyl_order(rs->lie_type());
  if (projected > cap)
    throw Error(ErrorKind::CapExceeded, "Weyl group of " + rs->lie_type().str() + " has order " +
                                            std::to_string(projected) + ", above the cap of " + std::to_string(cap));
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs->rank(); ++i) gens.push_back(WeylElement::simple_reflection(*rs, i));
  std::vector<WeylElement> elements{WeylElement::identity(rs->size())};
  std::vector<int> length{0};
  std::unordered_map<std::vector<int>, std::size_t, PermHash> seen;
  seen.emplace(elements.front().perm(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      WeylElement next = elements[head] * g;
      if (seen.count(next.perm())) continue;
      if (elements.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "Weyl group generation passed the cap of " + std::to_string(cap));
      seen.emplace(next.perm(), elements.size());
      length.push_back(length[head] + 1);
      elements.push_back(std::move(next));
    }
  }
  return WeylGroup(std::move(rs), std::move(elements), std::move(gens), std::move(length));
}

bool preserves_set(const WeylElement& w, const std::vector<int>& roots, const std::vector<bool>& member) {
  return std::all_of(roots.begin(), roots.end(), [&](int r) { return member[w(r)]; });
}

namespace {

std::vector<bool> membership(const FlagSpec& f, bool theta) {
  std::vector<bool> m(f.root_system().size(), false);
  for (int r : theta ? f.r_theta() : f.r_m()) m[r] = true;
  return m;
}

}  // namespace

bool in_a_theta(const WeylElement& w, const FlagSpec& f) { return preserves_set(w, f.r_theta(), membership(f, true)); }

AThetaResult a_theta(const WeylGroup& w, const FlagSpec& f) {
  AThetaResult out;
  auto in_theta = membership(f, true);
  auto in_m = membership(f, false);
  for (std::size_t i = 0; i < w.order(); ++i) {
    bool stab = preserves_set(w.element(i), f.r_theta(), in_theta);
    bool keeps_m = preserves_set(w.element(i), f.r_m(), in_m);
    if (stab) out.members.push_back(i);
    if (stab != keeps_m && out.r_m_criterion_holds) {
      out.r_m_criterion_holds = false;
      out.counterexample = i;
    }
  }
  return out;
}

namespace {

// t-index of omega(beta) for the fiber of each positive t-root, checked constant on the fiber.
std::vector<int> pulled_back(const WeylElement& w, const TRootSystem& ts) {
  if (!in_a_theta(w, ts.flag())) throw Error(ErrorKind::NotInStabilizer, "element does not preserve R_Theta");
  std::vector<int> out(ts.s());
  for (int k = 0; k < ts.s(); ++k) {
    int image = -1;
    for (int beta : ts.fiber(k)) {
      int t = ts.t_index_of_root(w(beta));
      if (image >= 0 && t != image)
        throw Error(ErrorKind::InvariantViolation, "action is not well defined on t-root " + ts.t_root(k).str());
      image = t;
    }
    out[k] = image;
  }
  return out;
}

}  // namespace

IACS act_on_iacs(const WeylElement& w, const TRootSystem& ts, const IACS& j) {
  auto img = pulled_back(w, ts);
  std::vector<int> signs(ts.s());
  for (int k = 0; k < ts.s(); ++k) signs[k] = j.sign_at(ts, img[k]);
  return IACS::from_signs(signs);
}

InvariantMetric act_on_metric(const WeylElement& w, const TRootSystem& ts, const InvariantMetric& g) {
  auto img = pulled_back(w, ts);
  std::vector<Rational> l(ts.s());
  for (int k = 0; k < ts.s(); ++k) l[k] = g.lambda_at(ts, img[k]);
  return InvariantMetric(std::move(l));
}

std::pair<IACS, InvariantMetric> act_on_structure(const WeylElement& w, const TRootSystem& ts, const IACS& j,
                                                  const InvariantMetric& g) {
  return {act_on_iacs(w, ts, j), act_on_metric(w, ts, g)};
}

std::vector<std::size_t> OrbitPartition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  return out;
}

OrbitPartition orbits(const std::vector<WeylElement>& group, const TRootSystem& ts,
                      const std::vector<std::pair<IACS, InvariantMetric>>& structures) {
  using Key = std::pair<std::uint64_t, std::vector<Rational>>;
  std::map<Key, int> index;
  for (std::size_t i = 0; i < structures.size(); ++i)
    index.emplace(Key{structures[i].first.mask(), structures[i].second.lambdas()}, static_cast<int>(i));
  std::vector<int> parent(structures.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& w : group) {
    auto img = pulled_back(w, ts);
    for (std::size_t i = 0; i < structures.size(); ++i) {
      const auto& [j, g] = structures[i];
      std::vector<int> signs(ts.s());
      std::vector<Rational> l(ts.s());
      for (int k = 0; k < ts.s(); ++k) {
        signs[k] = j.sign_at(ts, img[k]);
        l[k] = g.lambda_at(ts, img[k]);
      }
      auto it = index.find(Key{IACS::from_signs(signs).mask(), l});
      if (it == index.end())
        throw Error(ErrorKind::NotClosedUnderAction, "structure list is not closed under the group action");
      int a = find(static_cast<int>(i)), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition out;
  out.orbit_of.assign(structures.size(), -1);
  for (std::size_t i = 0; i < structures.size(); ++i) {
    int root = find(static_cast<int>(i));
    if (out.orbit_of[root] < 0) {
      out.orbit_of[root] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
      out.representatives.push_back(root);
    }
    out.orbit_of[i] = out.orbit_of[root];
    out.orbits[out.orbit_of[i]].push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace flagclass
