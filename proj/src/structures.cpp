#include "flagclass/structures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flagclass/error.hpp"

namespace flagclass {

IACS::IACS(int s, std::uint64_t mask) : s_(s), mask_(mask) {
  if (s < 1 || s > kMaxMaskBits) throw Error(ErrorKind::CapExceeded, "iacs with " + std::to_string(s) + " signs");
  if (mask >> s) throw Error(ErrorKind::InvalidArgument, "iacs mask wider than s");
}

IACS IACS::from_signs(const std::vector<int>& signs) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) throw Error(ErrorKind::InvalidArgument, "iacs signs must be +1 or -1");
    if (signs[k] < 0) mask |= std::uint64_t{1} << k;
  }
  return IACS(static_cast<int>(signs.size()), mask);
}

int IACS::sign_at(const TRootSystem& ts, int t_index) const {
  if (t_index < 0 || t_index >= ts.size()) throw Error(ErrorKind::NotATRoot, "t-root index out of range");
  return sign(ts.class_of(t_index)) * ts.sign_of(t_index);
}

std::vector<int> IACS::signs() const {
  std::vector<int> out(s_);
  for (int k = 0; k < s_; ++k) out[k] = sign(k);
  return out;
}

IACS IACS::conjugate() const { return IACS(s_, ~mask_ & ((std::uint64_t{1} << s_) - 1)); }

std::string IACS::str() const {
  std::string out = "(";
  for (int k = 0; k < s_; ++k) {
    if (k) out += ',';
    out += sign(k) > 0 ? "+1" : "-1";
  }
  return out + ")";
}

InvariantMetric::InvariantMetric(std::vector<Rational> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw Error(ErrorKind::InvalidArgument, "metric without parameters");
  for (const auto& l : lambdas_)
    if (l <= Rational(0)) throw Error(ErrorKind::InvalidArgument, "metric parameters must be positive");
}

InvariantMetric InvariantMetric::normal(int s) { return InvariantMetric(std::vector<Rational>(s, Rational(1))); }

bool InvariantMetric::is_normal() const {
  return std::all_of(lambdas_.begin(), lambdas_.end(), [&](const Rational& l) { return l == lambdas_.front(); });
}

std::string InvariantMetric::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < lambdas_.size(); ++k) {
    if (k) out += ',';
    out += lambdas_[k].str();
  }
  return out + ")";
}

std::uint64_t iacs_count(const TRootSystem& ts, int cap) {
  if (ts.s() > cap || ts.s() > kMaxMaskBits)
    throw Error(ErrorKind::CapExceeded, "2^" + std::to_string(ts.s()) + " structures exceed the iacs cap of 2^" +
                                            std::to_string(cap));
  return std::uint64_t{1} << ts.s();
}

std::vector<IACS> enumerate_iacs(const TRootSystem& ts, int cap) {
  std::uint64_t n = iacs_count(ts, cap);
  std::vector<IACS> out;
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) out.emplace_back(ts.s(), m);
  return out;
}

const char* to_string(TripleClass c) { return c == TripleClass::ZeroThree ? "(0,3)" : "(1,2)"; }

namespace {

void check_triple(const TRootSystem& ts, const ZeroSumTriple& t) {
  for (int m : t.members)
    if (m < 0 || m >= ts.size()) throw Error(ErrorKind::NotATRoot, "triple member is not a t-root of this flag");
  const auto& f = ts.functionals();
  for (int k = 0; k < f.dim(); ++k)
    if (f[t.members[0]][k] + f[t.members[1]][k] + f[t.members[2]][k] != 0)
      throw Error(ErrorKind::InvalidArgument, "triple does not sum to zero");
}

bool zero_three(const IACS& j, const TRootSystem& ts, const ZeroSumTriple& t) {
  int e0 = j.sign_at(ts, t.members[0]);
  return j.sign_at(ts, t.members[1]) == e0 && j.sign_at(ts, t.members[2]) == e0;
}

std::vector<Rational> triple_coefficients(const IACS& j, const TRootSystem& ts, const ZeroSumTriple& t) {
  std::vector<Rational> row(ts.s(), Rational(0));
  for (int m : t.members) row[ts.class_of(m)] += Rational(j.sign_at(ts, m));
  return row;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct UnionFind {
  std::vector<int> parent;
  int components;
  explicit UnionFind(int n) : parent(n), components(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[std::max(a, b)] = std::min(a, b);
    --components;
  }
};

}  // namespace

TripleClass classify_triple(const IACS& j, const TRootSystem& ts, const ZeroSumTriple& t) {
  if (j.s() != ts.s()) throw Error(ErrorKind::DimensionMismatch, "iacs size differs from |R_t+|");
  check_triple(ts, t);
  return zero_three(j, ts, t) ? TripleClass::ZeroThree : TripleClass::OneTwo;
}

bool j_complex_test(const IACS& j, const TRootSystem& ts) {
  for (const auto& [d, e, sum] : ts.sum_pairs()) {
    int ed = j.sign_at(ts, d), ee = j.sign_at(ts, e), es = j.sign_at(ts, sum);
    if (ed * ee + 1 - es * (ed + ee) != 0) return false;
  }
  return true;
}

bool has_zero_three(const IACS& j, const TRootSystem& ts) {
  for (const auto& t : ts.triples())
    if (zero_three(j, ts, t)) return true;
  return false;
}

bool is_integrable(const IACS& j, const TRootSystem& ts) {
  if (j.s() != ts.s()) throw Error(ErrorKind::DimensionMismatch, "iacs size differs from |R_t+|");
  bool a = j_complex_test(j, ts);
  bool b = !has_zero_three(j, ts);
  if (a != b)
    throw Error(ErrorKind::InvariantViolation, "integrability tests disagree on " + j.str() + " for " + ts.flag().str());
  return a;
}

std::vector<int> c_of_j(const IACS& j, const TRootSystem& ts) {
  std::vector<int> out;
  for (const auto& t : ts.triples())
    if (zero_three(j, ts, t))
      for (int m : t.members) out.push_back(ts.class_of(m));
  return sorted_unique(std::move(out));
}

std::vector<int> c_of_g(const InvariantMetric& g, const TRootSystem& ts) {
  std::vector<int> out;
  for (const auto& t : ts.triples()) {
    const Rational& l0 = g.lambda_at(ts, t.members[0]);
    if (g.lambda_at(ts, t.members[1]) == l0 && g.lambda_at(ts, t.members[2]) == l0)
      for (int m : t.members) out.push_back(ts.class_of(m));
  }
  return sorted_unique(std::move(out));
}

bool is_g1(const InvariantMetric& g, const IACS& j, const TRootSystem& ts) {
  if (g.s() != ts.s() || j.s() != ts.s()) throw Error(ErrorKind::DimensionMismatch, "structure size differs from |R_t+|");
  for (const auto& t : ts.triples()) {
    if (!zero_three(j, ts, t)) continue;
    const Rational& l0 = g.lambda_at(ts, t.members[0]);
    if (g.lambda_at(ts, t.members[1]) != l0 || g.lambda_at(ts, t.members[2]) != l0) return false;
  }
  return true;
}

bool g1_by_inclusion(const InvariantMetric& g, const IACS& j, const TRootSystem& ts) {
  auto cj = c_of_j(j, ts);
  auto cg = c_of_g(g, ts);
  return std::includes(cg.begin(), cg.end(), cj.begin(), cj.end());
}

RootLevelOracle::RootLevelOracle(const TRootSystem& ts, const StructureConstants& sc) : s_(ts.s()) {
  const FlagSpec& f = ts.flag();
  const RootSystem& rs = f.root_system();
  if (&sc.root_system() != &rs && sc.root_system().lie_type() != rs.lie_type())
    throw Error(ErrorKind::InvalidArgument, "structure constants belong to another root system");
  const auto& rm = f.r_m();
  for (int a : rm)
    for (int b : rm) {
      int c = rs.sum_index(a, b);
      if (c < 0 || !f.in_r_m(c)) continue;
      pairs_.push_back(Pair{ts.t_index_of_root(a), ts.t_index_of_root(b), ts.t_index_of_root(c), sc.weyl(a, b)});
    }
  for (int a : rm)
    for (int b : rm) {
      int sum = rs.sum_index(a, b);
      if (sum < 0 || !f.in_r_m(sum)) continue;
      int c = rs.negation(sum);
      if (c <= a) continue;
      triples_.push_back(Triple{ts.t_index_of_root(a), ts.t_index_of_root(b), ts.t_index_of_root(c), sc.weyl(a, b),
                                sc.weyl(c, b)});
    }
}

bool RootLevelOracle::integrable(const IACS& j) const {
  for (const auto& p : pairs_) {
    ExtScalar coeff = p.n.scaled(Rational(nij_factor(eps(j, p.ta), eps(j, p.tb), eps(j, p.tsum))));
    if (!coeff.is_zero()) return false;
  }
  return true;
}

std::vector<RootLevelOracle::G1Term> RootLevelOracle::g1_terms(const IACS& j) const {
  std::vector<G1Term> out;
  for (const auto& t : triples_) {
    int ea = eps(j, t.ta), eb = eps(j, t.tb), ec = eps(j, t.tc);
    // a+b = -c and c+b = -a
    ExtScalar coeff_c = t.n_ab.scaled(Rational(nij_factor(ea, eb, -ec)));
    ExtScalar coeff_a = t.n_cb.scaled(Rational(nij_factor(ec, eb, -ea)));
    if (coeff_c.is_zero() && coeff_a.is_zero()) continue;
    int cls_c = t.tc < s_ ? t.tc : t.tc - s_;
    int cls_a = t.ta < s_ ? t.ta : t.ta - s_;
    out.push_back(G1Term{coeff_c, coeff_a, cls_c, cls_a});
  }
  return out;
}

bool RootLevelOracle::g1_terms_vanish(const std::vector<G1Term>& terms, const std::vector<Rational>& lambdas) {
  for (const auto& t : terms)
    if (!(t.coeff_c.scaled(lambdas[t.class_c]) + t.coeff_a.scaled(lambdas[t.class_a])).is_zero()) return false;
  return true;
}

bool RootLevelOracle::g1(const InvariantMetric& g, const IACS& j) const {
  return g1_terms_vanish(g1_terms(j), g.lambdas());
}

bool nijenhuis_oracle(const TRootSystem& ts, const StructureConstants& sc, const IACS& j) {
  return RootLevelOracle(ts, sc).integrable(j);
}

bool g1_oracle(const TRootSystem& ts, const StructureConstants& sc, const InvariantMetric& g, const IACS& j) {
  return RootLevelOracle(ts, sc).g1(g, j);
}

Rational kahler_triple_sum(const InvariantMetric& g, const IACS& j, const TRootSystem& ts, const ZeroSumTriple& t) {
  check_triple(ts, t);
  Rational sum(0);
  for (int m : t.members) sum += Rational(j.sign_at(ts, m)) * g.lambda_at(ts, m);
  return sum;
}

namespace {

LinearSystem positivity_system(int s) {
  LinearSystem sys;
  sys.num_vars = s;
  for (int k = 0; k < s; ++k) {
    std::vector<Rational> row(s, Rational(0));
    row[k] = 1;
    sys.add(std::move(row), Relation::Greater);
  }
  return sys;
}

MetricFeasibility finish(LinearSystem sys) {
  MetricFeasibility out;
  FeasibilityResult r = solve_feasibility(sys);
  out.feasible = r.feasible;
  if (r.feasible)
    out.sample = primitive_integer_multiple(r.solution);
  else
    out.certificate = std::move(r.certificate);
  out.system = std::move(sys);
  return out;
}

}  // namespace

MetricFeasibility qk_feasibility(const IACS& j, const TRootSystem& ts) {
  LinearSystem sys = positivity_system(ts.s());
  for (const auto& t : ts.triples())
    if (!zero_three(j, ts, t)) sys.add(triple_coefficients(j, ts, t), Relation::Equal);
  return finish(std::move(sys));
}

MetricFeasibility ak_feasibility(const IACS& j, const TRootSystem& ts, bool presolve) {
  LinearSystem sys = positivity_system(ts.s());
  for (const auto& t : ts.triples()) sys.add(triple_coefficients(j, ts, t), Relation::Equal);
  if (presolve) {
    const int s = ts.s();
    for (std::size_t e = s; e < sys.constraints.size(); ++e) {
      const auto& row = sys.constraints[e].coeffs;
      int sign = 0;
      bool definite = true;
      for (const auto& c : row) {
        if (c.is_zero()) continue;
        if (sign == 0) sign = c.sign();
        if (c.sign() != sign) definite = false;
      }
      if (!definite || sign == 0) continue;
      MetricFeasibility out;
      out.decided_by_presolve = true;
      out.certificate.assign(sys.constraints.size(), Rational(0));
      out.certificate[e] = Rational(-sign);
      for (int k = 0; k < s; ++k)
        if (!row[k].is_zero()) out.certificate[k] = Rational(row[k].sign()) * row[k];
      out.system = std::move(sys);
      return out;
    }
  }
  return finish(std::move(sys));
}

std::vector<std::string> LabelSet::names() const {
  std::vector<std::string> out;
  if (integrable) out.emplace_back("Integrable");
  if (kahler) out.emplace_back("Kahler");
  if (qk) out.emplace_back("QK");
  if (g1) out.emplace_back("G1");
  return out;
}

std::string LabelSet::str() const {
  std::string out = "{";
  auto n = names();
  for (std::size_t i = 0; i < n.size(); ++i) out += (i ? ", " : "") + n[i];
  return out + "}";
}

LabelSet classify_structure(const InvariantMetric& g, const IACS& j, const TRootSystem& ts) {
  LabelSet labels;
  labels.integrable = is_integrable(j, ts);
  bool all_vanish = true;
  labels.qk = true;
  for (const auto& t : ts.triples()) {
    bool vanish = kahler_triple_sum(g, j, ts, t).is_zero();
    if (!vanish) {
      all_vanish = false;
      if (!zero_three(j, ts, t)) labels.qk = false;
    }
  }
  if (all_vanish && !labels.integrable)
    throw Error(ErrorKind::InvariantViolation,
                "almost Kahler but not integrable: " + g.str() + " " + j.str() + " on " + ts.flag().str());
  labels.kahler = labels.integrable && all_vanish;
  labels.g1 = is_g1(g, j, ts);
  return labels;
}

bool ChamberSet::contains(std::uint64_t mask) const {
  auto it = std::lower_bound(chambers.begin(), chambers.end(), mask,
                             [](const IACS& c, std::uint64_t m) { return c.mask() < m; });
  return it != chambers.end() && it->mask() == mask;
}

ChamberSet t_chambers(const TRootSystem& ts) {
  const int s = ts.s();
  const int d = static_cast<int>(ts.flag().sigma_m().size());
  struct Partial {
    std::uint64_t mask;
    std::vector<Rational> point;
  };
  auto row_of = [&](int k, int sign) {
    std::vector<Rational> row(d);
    for (int i = 0; i < d; ++i) row[i] = Rational(sign * ts.t_root(k).coords[i]);
    return row;
  };
  auto value = [&](int k, const std::vector<Rational>& x) {
    Rational v(0);
    for (int i = 0; i < d; ++i)
      if (ts.t_root(k).coords[i]) v += Rational(ts.t_root(k).coords[i]) * x[i];
    return v;
  };
  std::vector<Partial> level{{0, std::vector<Rational>(d, Rational(0))}};
  for (int k = 0; k < s; ++k) {
    std::vector<Partial> next;
    for (const auto& p : level) {
      Rational v = value(k, p.point);
      for (int sign : {1, -1}) {
        std::uint64_t mask = sign > 0 ? p.mask : p.mask | (std::uint64_t{1} << k);
        if (v.sign() == sign) {
          next.push_back({mask, p.point});
          continue;
        }
        LinearSystem sys;
        sys.num_vars = d;
        for (int i = 0; i < k; ++i) sys.add(row_of(i, (p.mask >> i) & 1U ? -1 : 1), Relation::Greater);
        sys.add(row_of(k, sign), Relation::Greater);
        FeasibilityResult r = solve_feasibility(sys);
        if (r.feasible) next.push_back({mask, primitive_integer_multiple(r.solution)});
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [](const Partial& a, const Partial& b) { return a.mask < b.mask; });
  ChamberSet out;
  for (auto& p : level) {
    out.chambers.emplace_back(s, p.mask);
    out.samples.push_back(std::move(p.point));
  }
  return out;
}

IACS forcing_iacs(const TRootSystem& ts, const ZeroSumTriple& t) {
  std::uint64_t mask = 0;
  for (int m : t.members)
    if (ts.sign_of(m) < 0) mask |= std::uint64_t{1} << ts.class_of(m);
  return IACS(ts.s(), mask);
}

std::optional<std::string> validate_certificate(const TRootSystem& ts, const PairCertificate& c) {
  if (c.chain.from != c.from || c.chain.to != c.to) return "chain endpoints differ from the certified pair";
  if (auto why = validate_chain(ts.functionals(), c.chain)) return why;
  if (c.forcing.size() != c.chain.triples.size()) return "one forcing structure per triple expected";
  for (std::size_t i = 0; i < c.forcing.size(); ++i)
    if (classify_triple(c.forcing[i], ts, c.chain.triples[i]) != TripleClass::ZeroThree)
      return "forcing structure " + std::to_string(i) + " leaves its triple (1,2)";
  return std::nullopt;
}

NormalMetricReport normal_metric_unique(const TRootSystem& ts, int cap) {
  const std::uint64_t n = iacs_count(ts, cap);
  const int s = ts.s();
  NormalMetricReport report;
  UnionFind uf(s);
  for (std::uint64_t m = 0; m < n && uf.components > 1; ++m) {
    IACS j(s, m);
    for (const auto& t : ts.triples())
      if (zero_three(j, ts, t)) {
        uf.unite(ts.class_of(t.members[0]), ts.class_of(t.members[1]));
        uf.unite(ts.class_of(t.members[0]), ts.class_of(t.members[2]));
      }
    report.masks_scanned = m + 1;
  }
  std::vector<std::vector<int>> comps(s);
  for (int k = 0; k < s; ++k) comps[uf.find(k)].push_back(k);
  for (auto& c : comps)
    if (!c.empty()) report.components.push_back(std::move(c));
  report.holds = report.components.size() == 1;
  if (!report.holds) {
    report.detail = std::to_string(report.components.size()) + " independent metric parameters survive every iacs";
    return report;
  }
  report.certificates_valid = true;
  if (s == 1) return report;
  TripleGraph graph(ts.functionals(), ts.triples());
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      PairCertificate c;
      c.from = a;
      c.to = b;
      c.chain = graph.shortest_chain(a, b);
      for (const auto& t : c.chain.triples) c.forcing.push_back(forcing_iacs(ts, t));
      if (auto why = validate_certificate(ts, c)) {
        report.certificates_valid = false;
        report.detail = *why;
      }
      report.certificates.push_back(std::move(c));
    }
  return report;
}

LiftReport check_triple_lifts(const TRootSystem& ts) {
  LiftReport report;
  const RootSystem& rs = ts.root_system();
  for (const auto& t : ts.triples()) {
    bool found = false;
    for (int a : ts.fiber(t.members[0])) {
      for (int b : ts.fiber(t.members[1])) {
        int sum = rs.sum_index(a, b);
        if (sum < 0) continue;
        if (ts.t_index_of_root(rs.negation(sum)) == t.members[2]) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      report.holds = false;
      report.unlifted.push_back(t);
    }
  }
  return report;
}

}  // namespace flagclass
