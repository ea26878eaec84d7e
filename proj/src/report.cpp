#include "flagclass/report.hpp"

#include <numeric>
#include <sstream>

#include "flagclass/error.hpp"
#include "flagclass/tzs.hpp"

namespace flagclass {

Json to_json(const Rational& r) {
  if (r.is_integer()) return Json(r.num());
  return Json(r.str());
}

Json to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

namespace {

Json coords(const Coords& c) { return Json(c); }

Json theta_json(const FlagSpec& f) { return Json(f.theta()); }

Json header(const FlagSpec& f) {
  Json j;
  j["schema"] = kSchema;
  j["flag"] = f.str();
  j["painted"] = f.painted();
  j["type"] = f.root_system().lie_type().str();
  j["theta"] = theta_json(f);
  j["sigma_m"] = Json(f.sigma_m());
  return j;
}

Json positive_list(const TRootSystem& ts, const std::vector<int>& classes) {
  Json arr = Json::array();
  for (int k : classes) arr.push_back(coords(ts.t_root(k).coords));
  return arr;
}

// Classes forced equal by the (0,3)-triples of j; singletons omitted.
std::vector<std::vector<int>> g1_groups(const IACS& j, const TRootSystem& ts) {
  std::vector<int> parent(ts.s());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& t : ts.triples()) {
    if (classify_triple(j, ts, t) != TripleClass::ZeroThree) continue;
    for (int m : t.members) {
      int a = find(ts.class_of(t.members[0])), b = find(ts.class_of(m));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> groups(ts.s());
  for (int k = 0; k < ts.s(); ++k) groups[find(k)].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& g : groups)
    if (g.size() > 1) out.push_back(std::move(g));
  return out;
}

}  // namespace

Json info_report(const FlagSpec& f) {
  TRootSystem ts(f);
  const RootSystem& rs = f.root_system();
  Json j = header(f);
  Json counts;
  counts["roots"] = rs.size();
  counts["r_theta"] = f.r_theta().size();
  counts["r_m"] = f.r_m().size();
  counts["s"] = ts.s();
  counts["triples"] = ts.triples().size();
  j["counts"] = std::move(counts);
  Json troots = Json::array();
  for (int k = 0; k < ts.s(); ++k) {
    Json t;
    t["coords"] = coords(ts.t_root(k).coords);
    t["dim"] = ts.summand_dim(k);
    Json fiber = Json::array();
    for (int r : ts.fiber(k)) fiber.push_back(coords(rs.root(r).coords()));
    t["fiber"] = std::move(fiber);
    troots.push_back(std::move(t));
  }
  j["t_roots"] = std::move(troots);
  Json triples = Json::array();
  for (const auto& t : ts.triples()) triples.push_back(to_json(ts.functionals(), t));
  j["triples"] = std::move(triples);
  j["tzs"] = to_json(ts.functionals(), connectivity(ts.functionals()));
  return j;
}

Json classification_report(const FlagSpec& f, const ClassifyOptions& opt) {
  TRootSystem ts(f);
  const std::uint64_t n = iacs_count(ts, opt.iacs_cap);
  std::optional<StructureConstants> sc;
  std::optional<RootLevelOracle> oracle;
  if (opt.with_oracle) {
    sc.emplace(compute_structure_constants(f.root_system_ptr()));
    oracle.emplace(ts, *sc);
  }
  ChamberSet chambers = t_chambers(ts);
  const InvariantMetric normal = InvariantMetric::normal(ts.s());

  Json j = header(f);
  j["s"] = ts.s();
  Json triples = Json::array();
  for (const auto& t : ts.triples()) triples.push_back(to_json(ts.functionals(), t));
  j["triples"] = std::move(triples);
  std::uint64_t integrable = 0, qk_feasible = 0, kahler = 0;
  bool ak_equals_k = true;
  Json list = Json::array();
  for (std::uint64_t m = 0; m < n; ++m) {
    IACS J(ts.s(), m);
    Json e;
    e["signs"] = Json(J.signs());
    bool integ = is_integrable(J, ts);
    e["integrable"] = integ;
    if (oracle) {
      bool o = oracle->integrable(J);
      if (o != integ) throw Error(ErrorKind::InvariantViolation, "tensor oracle disagrees on " + J.str());
      e["nijenhuis_oracle"] = o;
    }
    e["in_t_chamber"] = chambers.contains(m);
    e["c_of_j"] = positive_list(ts, c_of_j(J, ts));
    MetricFeasibility qk = qk_feasibility(J, ts);
    Json q;
    q["feasible"] = qk.feasible;
    q["sample"] = qk.feasible ? to_json(qk.sample) : Json(nullptr);
    e["qk"] = std::move(q);
    bool kahler_here = integ && qk.feasible;
    e["kahler"] = kahler_here;
    Json groups = Json::array();
    for (const auto& g : g1_groups(J, ts)) groups.push_back(positive_list(ts, g));
    e["g1_classes"] = std::move(groups);
    e["normal_labels"] = Json(classify_structure(normal, J, ts).names());
    Json zero_three = Json::array();
    for (std::size_t t = 0; t < ts.triples().size(); ++t)
      if (classify_triple(J, ts, ts.triples()[t]) == TripleClass::ZeroThree) zero_three.push_back(t);
    e["zero_three"] = std::move(zero_three);
    if (!integ) {
      MetricFeasibility ak = ak_feasibility(J, ts);
      if (ak.feasible || !certifies_infeasible(ak.system, ak.certificate)) ak_equals_k = false;
    }
    integrable += integ;
    qk_feasible += qk.feasible;
    kahler += kahler_here;
    list.push_back(std::move(e));
  }
  Json counts;
  counts["iacs"] = n;
  counts["integrable"] = integrable;
  counts["t_chambers"] = chambers.chambers.size();
  counts["qk_feasible"] = qk_feasible;
  counts["kahler"] = kahler;
  j["counts"] = std::move(counts);
  j["iacs"] = std::move(list);
  NormalMetricReport nm = normal_metric_unique(ts, opt.iacs_cap);
  Json th;
  th["normal_metric_unique"] = nm.holds && nm.certificates_valid;
  th["ak_equals_k"] = ak_equals_k;
  th["tzs_connected"] = connectivity(ts.functionals()).connected;
  j["theorems"] = std::move(th);
  return j;
}

Json orbit_report(const FlagSpec& f, std::uint64_t weyl_cap, int iacs_cap) {
  TRootSystem ts(f);
  WeylGroup w = generate_weyl(f.root_system_ptr(), weyl_cap);
  AThetaResult at = a_theta(w, f);
  std::vector<WeylElement> sub;
  for (auto i : at.members) sub.push_back(w.element(i));
  std::vector<std::pair<IACS, InvariantMetric>> structures;
  for (const auto& J : enumerate_iacs(ts, iacs_cap)) structures.emplace_back(J, InvariantMetric::normal(ts.s()));
  OrbitPartition p = orbits(sub, ts, structures);
  Json j = header(f);
  j["weyl_order"] = w.order();
  j["a_theta_order"] = at.members.size();
  j["a_theta_preserves_r_m_exactly"] = at.r_m_criterion_holds;
  Json orbs = Json::array();
  for (std::size_t o = 0; o < p.orbits.size(); ++o) {
    Json oj;
    oj["representative"] = p.representatives[o];
    oj["signs"] = Json(structures[p.representatives[o]].first.signs());
    oj["members"] = Json(p.orbits[o]);
    orbs.push_back(std::move(oj));
  }
  j["orbits"] = std::move(orbs);
  return j;
}

std::string render_text(const Json& r) {
  std::ostringstream out;
  out << r.value("flag", "") << "  (" << r.value("painted", "") << ")\n";
  if (r.contains("counts")) {
    for (const auto& [k, v] : r["counts"].items()) out << "  " << k << ": " << v.dump() << "\n";
  }
  if (r.contains("t_roots")) {
    out << "  t-roots:\n";
    for (const auto& t : r["t_roots"]) out << "    " << t["coords"].dump() << "  dim " << t["dim"].dump() << "\n";
    out << "  tzs connected: " << (r["tzs"]["connected"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (r.contains("iacs")) {
    for (const auto& e : r["iacs"]) {
      out << "  " << e["signs"].dump() << (e["integrable"].get<bool>() ? "  integrable" : "  non-integrable");
      out << "  qk " << (e["qk"]["feasible"].get<bool>() ? e["qk"]["sample"].dump() : "infeasible");
      out << "  normal " << e["normal_labels"].dump() << "\n";
    }
  }
  if (r.contains("theorems")) {
    for (const auto& [k, v] : r["theorems"].items()) out << "  " << k << ": " << (v.get<bool>() ? "holds" : "FAILS") << "\n";
  }
  if (r.contains("orbits")) {
    out << "  |W| = " << r["weyl_order"].dump() << ", |A_Theta| = " << r["a_theta_order"].dump() << "\n";
    for (const auto& o : r["orbits"]) out << "  orbit of " << o["signs"].dump() << ": " << o["members"].size() << "\n";
  }
  return out.str();
}

}  // namespace flagclass
