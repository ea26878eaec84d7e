// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "flagclass/kernels.hpp"
#include "flagclass/verify.hpp"
#include "oracles.hpp"

using namespace flagclass;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && passed) {
      passed = false;
      detail = why;
    }
  }
  void absorb(const CheckResult& r) {
    require(r.passed, r.name + ": " + r.summary + (r.counterexample.is_null() ? "" : " " + r.counterexample.dump()));
    if (r.passed) detail += (detail.empty() ? "" : "; ") + r.summary;
  }
};

std::shared_ptr<const RootSystem> sys(const LieType& t) { return std::make_shared<const RootSystem>(t); }

Outcome tzs_roots() {
  Outcome o;
  for (const auto& t : all_types_up_to(8))
    o.require(RootSystem(t).size() == oracle::root_count(t), t.str() + " root count");
  o.absorb(check_tzs_roots(8, 50, 20240601));
  return o;
}

Outcome tzs_t_roots() {
  Outcome o;
  std::size_t expected = 0;
  for (const auto& t : all_types_up_to(6)) {
    expected += (std::size_t{1} << t.rank) - 1;
    o.require(all_flags(sys(t)).size() == (std::size_t{1} << t.rank) - 1, t.str() + " flag count");
  }
  o.require(expected == 545, "rank <= 6 corpus size");
  o.absorb(check_tzs_t_roots(6));
  return o;
}

Outcome iacs_counts() {
  Outcome o;
  for (const auto& t : all_types_up_to(4))
    for (const auto& f : all_flags(sys(t))) {
      TRootSystem ts(f);
      o.require(iacs_count(ts, 24) == std::uint64_t{1} << oracle::positive_t_root_count(f), f.str());
    }
  o.absorb(check_iacs_counts(4, 24));
  return o;
}

// Chambers of the t-arrangement counted as Weyl cosets in which R_Theta
// becomes a standard Levi subsystem.
std::uint64_t standard_levi_count(const WeylGroup& w, const FlagSpec& f) {
  const RootSystem& rs = f.root_system();
  std::uint64_t standard = 0;
  for (const auto& e : w.elements()) {
    WeylElement inv = e.inverse();
    std::vector<int> simples;
    std::vector<Coords> images;
    for (int r : f.r_theta()) {
      Coords c = rs.root(inv(r)).coords();
      images.push_back(c);
      int nonzero = 0, at = 0;
      for (int i = 0; i < rs.rank(); ++i)
        if (c[i] != 0) ++nonzero, at = i + 1;
      if (nonzero == 1 && c[at - 1] == 1) simples.push_back(at);
    }
    bool inside = true;
    for (const auto& c : images) inside = inside && oracle::supported_on(c, simples);
    std::size_t spanned = 0;
    for (const auto& r : rs.roots()) spanned += !simples.empty() && oracle::supported_on(r.coords(), simples);
    standard += inside && spanned == images.size();
  }
  return standard / oracle::weyl_theta_order(f);
}

IntegrabilityChecks integrability_result;

Outcome four_way() {
  Outcome o;
  for (const auto& t : all_types_up_to(4)) {
    auto rs = sys(t);
    WeylGroup w = generate_weyl(rs);
    for (const auto& f : all_flags(rs)) {
      TRootSystem ts(f);
      o.require(t_chambers(ts).chambers.size() == standard_levi_count(w, f), f.str() + " chamber count");
    }
  }
  integrability_result = check_integrability(4, 24, true, 13);
  o.absorb(integrability_result.four_way);
  return o;
}

Outcome isotropy_irreducible() {
  Outcome o;
  o.absorb(check_isotropy_irreducible(4));
  return o;
}

Outcome two_summand() {
  Outcome o;
  // B2 with only the short simple root painted: alpha_1 + 2 alpha_2 restricts to 2 delta.
  TRootSystem ts(FlagSpec::parse("B2 theta=1"));
  o.require(ts.s() == 2 && ts.t_root(1).coords == Coords{2}, "B2 theta=1 has t-roots delta, 2 delta");
  o.absorb(check_two_summand(4));
  return o;
}

Outcome ak_equals_k() {
  Outcome o;
  o.require(!integrability_result.ak_equals_k.name.empty(), "the integrability sweep did not run");
  o.absorb(integrability_result.ak_equals_k);
  return o;
}

Outcome normal_metric() {
  Outcome o;
  o.absorb(check_normal_metric(4, 24));
  return o;
}

Outcome g1_agreement() {
  Outcome o;
  o.absorb(check_g1_oracle(3, {1, 2, 3}, true));
  return o;
}

Outcome chevalley() {
  Outcome o;
  for (const auto& t : all_types_up_to(6)) {
    auto rs = sys(t);
    StructureConstants sc = compute_structure_constants(rs);
    for (int a = 0; a < rs->size(); ++a)
      for (int b = 0; b < rs->size(); ++b) {
        if (rs->sum_index(a, b) < 0) continue;
        int p = oracle::root_string(*rs, rs->root(a).coords(), rs->root(b).coords()).first;
        o.require(std::abs(sc.chevalley(a, b)) == p + 1, t.str() + " |N_ab| != p + 1");
      }
  }
  o.absorb(check_chevalley(6));
  CheckResult fault = check_chevalley(2, true);
  o.require(!fault.passed && fault.counterexample.contains("triple"), "injected fault not detected");
  return o;
}

Outcome weyl_and_orbits() {
  Outcome o;
  const std::map<std::string, std::uint64_t> table{{"A2", 6},  {"A3", 24},  {"B2", 8},   {"B3", 48},
                                                   {"C3", 48}, {"D4", 192}, {"F4", 1152}, {"G2", 12}};
  for (const auto& [name, order] : table) {
    LieType t = LieType::parse(name);
    o.require(generate_weyl(sys(t)).order() == order, name + " order");
    o.require(oracle::weyl_order(t) == order, name + " closed form");
  }
  o.absorb(check_weyl_orders(4, kDefaultWeylCap));
  o.absorb(check_a_theta(4, kDefaultWeylCap));
  o.absorb(check_orbit_labels(3, {1, 2, 3}, kDefaultWeylCap));
  return o;
}

Outcome a2_end_to_end() {
  Outcome o;
  FlagSpec f = FlagSpec::parse("A2");
  TRootSystem ts(f);
  o.require(ts.s() == 3 && iacs_count(ts) == 8, "8 structures");
  o.absorb(check_a2_end_to_end());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tzs connectivity of root systems, rank <= 8", tzs_roots},
      {"tzs connectivity of t-roots, rank <= 6", tzs_t_roots},
      {"2^s structures per flag, rank <= 4", iacs_counts},
      {"four-way integrability agreement, rank <= 4", four_way},
      {"isotropy irreducible flags integrable and G1", isotropy_irreducible},
      {"two-summand structure not integrable", two_summand},
      {"almost Kahler implies Kahler, rank <= 4", ak_equals_k},
      {"normal metric unique G1 metric, rank <= 4", normal_metric},
      {"G1 test equals tensor oracle, rank <= 3", g1_agreement},
      {"Chevalley constants valid, rank <= 6", chevalley},
      {"Weyl orders, A_Theta, orbit-constant labels", weyl_and_orbits},
      {"A2 full flag end to end", a2_end_to_end},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu  %s  (%.1f s)  %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.passed;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), total);
  return failed ? 1 : 0;
}
