#include "doctest.h"
#include "flagclass/kernels.hpp"
#include "flagclass/report.hpp"
#include "flagclass/verify.hpp"

using namespace flagclass;

TEST_CASE("serial and parallel integrability censuses agree") {
  FlagSpec f = FlagSpec::parse("B3");
  TRootSystem ts(f);
  StructureConstants sc = compute_structure_constants(f.root_system_ptr());
  CensusContext ctx(ts, sc);
  const std::uint64_t n = iacs_count(ts);
  IntegrabilityCensus a = integrability_census_serial(ctx, 0, n);
  IntegrabilityCensus b = integrability_census_parallel(ctx, 0, n);
  CHECK(a == b);
  CHECK(a.total == 512);
  CHECK(a.j_complex == 48);
  CHECK(a.disagreements == 0);
  CHECK(a.ak_violations == 0);
  IntegrabilityCensus lo = integrability_census_serial(ctx, 0, 100);
  lo.merge(integrability_census_serial(ctx, 100, n));
  CHECK(lo == a);
}

TEST_CASE("serial and parallel G1 censuses agree") {
  FlagSpec f = FlagSpec::parse("A3");
  TRootSystem ts(f);
  StructureConstants sc = compute_structure_constants(f.root_system_ptr());
  CensusContext ctx(ts, sc);
  G1Census a = g1_census_serial(ctx, {1, 2});
  G1Census b = g1_census_parallel(ctx, {1, 2});
  CHECK(a == b);
  CHECK(a.pairs == 64 * 64);
  CHECK(a.disagreements == 0);
}

TEST_CASE("grid metrics vary the first t-root fastest") {
  CHECK(grid_metric(3, {1, 2, 3}, 1).lambdas() == std::vector<Rational>{2, 1, 1});
  CHECK(grid_metric(3, {1, 2, 3}, 3).lambdas() == std::vector<Rational>{1, 2, 1});
  CHECK(grid_size(4, 3) == 81);
}

TEST_CASE("classification report content and determinism") {
  FlagSpec f = FlagSpec::parse("A2");
  Json a = classification_report(f);
  CHECK(a["schema"] == "flagclass/1");
  CHECK(a["counts"]["iacs"] == 8);
  CHECK(a["counts"]["integrable"] == 6);
  CHECK(a["counts"]["t_chambers"] == 6);
  CHECK(a["theorems"]["normal_metric_unique"] == true);
  CHECK(a["theorems"]["ak_equals_k"] == true);
  CHECK(a["iacs"][4]["signs"] == Json::array({1, 1, -1}));
  CHECK(a["iacs"][4]["zero_three"].size() == 2);
  CHECK(a["iacs"][0]["qk"]["sample"] == Json::array({1, 1, 2}));
  CHECK(a.dump() == classification_report(f).dump());
}

TEST_CASE("info report") {
  Json j = info_report(FlagSpec::parse("A3 theta=2,3"));
  CHECK(j["counts"]["s"] == 1);
  CHECK(j["t_roots"][0]["dim"] == 3);
  CHECK(j["tzs"]["connected"] == true);
  CHECK(render_text(j).find("tzs connected: yes") != std::string::npos);
}

TEST_CASE("orbit report") {
  Json j = orbit_report(FlagSpec::parse("A2"));
  CHECK(j["weyl_order"] == 6);
  CHECK(j["a_theta_order"] == 6);
  CHECK(j["orbits"].size() == 2);
}

TEST_CASE("rank 2 suite passes quickly and the fault is caught") {
  SuiteOptions opt;
  opt.max_rank = 2;
  for (const auto& r : run_suite(opt)) {
    CAPTURE(r.name);
    CAPTURE(r.summary);
    CHECK(r.passed);
  }
  CheckResult bad = check_chevalley(2, true);
  CHECK_FALSE(bad.passed);
  CHECK(bad.counterexample["triple"].size() == 3);
}
