#include "doctest.h"
#include "flagclass/chevalley.hpp"
#include "flagclass/structures.hpp"
#include "flagclass/weyl.hpp"
#include "oracles.hpp"

using namespace flagclass;

TEST_CASE("iacs bit order and signs") {
  IACS j = IACS::from_signs({1, 1, -1});
  CHECK(j.mask() == 4);
  CHECK(j.str() == "(+1,+1,-1)");
  CHECK(j.conjugate().signs() == std::vector<int>{-1, -1, 1});
  TRootSystem ts(FlagSpec::parse("A2"));
  CHECK(j.sign_at(ts, 2) == -1);
  CHECK(j.sign_at(ts, 5) == 1);
  CHECK(enumerate_iacs(ts).size() == 8);
}

TEST_CASE("iacs cap") {
  TRootSystem ts(FlagSpec::parse("B3"));
  CHECK(ts.s() == 9);
  CHECK_THROWS_AS(iacs_count(ts, 8), Error);
  CHECK(iacs_count(ts, 9) == 512);
}

TEST_CASE("A2 classification") {
  TRootSystem ts(FlagSpec::parse("A2"));
  IACS plus = IACS::from_signs({1, 1, 1});
  IACS mixed = IACS::from_signs({1, 1, -1});
  CHECK(is_integrable(plus, ts));
  CHECK_FALSE(is_integrable(mixed, ts));
  for (const auto& t : ts.triples()) CHECK(classify_triple(mixed, ts, t) == TripleClass::ZeroThree);

  MetricFeasibility qk = qk_feasibility(plus, ts);
  REQUIRE(qk.feasible);
  CHECK(qk.sample == std::vector<Rational>{1, 1, 2});
  CHECK_FALSE(ak_feasibility(mixed, ts).feasible);

  InvariantMetric g({1, 1, 2});
  CHECK(classify_structure(g, plus, ts) == LabelSet{true, true, true, true});
  CHECK(classify_structure(g, mixed, ts) == LabelSet{false, false, true, false});
  CHECK(classify_structure(InvariantMetric::normal(3), mixed, ts).g1);
}

TEST_CASE("triple classification rejects foreign triples") {
  TRootSystem ts(FlagSpec::parse("A2"));
  ZeroSumTriple bad{{0, 1, 2}};
  CHECK_THROWS_AS(classify_triple(IACS(3, 0), ts, bad), Error);
}

TEST_CASE("integrable structures are the standard-Levi Weyl cosets") {
  // J integrable <-> a parabolic with Levi R_Theta <-> a positive system in
  // which R_Theta is spanned by simple roots, counted up to W_Theta.
  for (const auto& t : all_types_up_to(3)) {
    auto rs = std::make_shared<const RootSystem>(t);
    WeylGroup w = generate_weyl(rs);
    for (const auto& f : all_flags(rs)) {
      std::uint64_t standard = 0;
      for (const auto& e : w.elements()) {
        WeylElement inv = e.inverse();
        std::vector<int> simples;
        std::vector<Coords> images;
        for (int r : f.r_theta()) {
          Coords c = rs->root(inv(r)).coords();
          images.push_back(c);
          int nonzero = 0, at = 0;
          for (int i = 0; i < rs->rank(); ++i)
            if (c[i] != 0) ++nonzero, at = i + 1;
          if (nonzero == 1 && c[at - 1] == 1) simples.push_back(at);
        }
        std::size_t spanned = 0;
        for (const auto& r : rs->roots()) spanned += !simples.empty() && oracle::supported_on(r.coords(), simples);
        bool inside = true;
        for (const auto& c : images) inside = inside && oracle::supported_on(c, simples);
        standard += inside && spanned == images.size();
      }
      TRootSystem ts(f);
      std::uint64_t integrable = 0;
      for (const auto& j : enumerate_iacs(ts)) integrable += is_integrable(j, ts);
      CAPTURE(f.str());
      CHECK(integrable == standard / oracle::weyl_theta_order(f));
      CHECK(t_chambers(ts).chambers.size() == integrable);
      if (f.theta().empty()) CHECK(integrable == oracle::weyl_order(t));
    }
  }
}

TEST_CASE("integrability matches the tensor oracle and survives conjugation") {
  for (const char* name : {"A3", "B2", "G2", "C3 theta=2", "B3 theta=1"}) {
    FlagSpec f = FlagSpec::parse(name);
    TRootSystem ts(f);
    StructureConstants sc = compute_structure_constants(f.root_system_ptr());
    for (const auto& j : enumerate_iacs(ts)) {
      CHECK(is_integrable(j, ts) == nijenhuis_oracle(ts, sc, j));
      CHECK(is_integrable(j, ts) == is_integrable(j.conjugate(), ts));
    }
  }
}

TEST_CASE("Kahler samples solve every triple equation") {
  TRootSystem ts(FlagSpec::parse("A3"));
  for (const auto& j : enumerate_iacs(ts)) {
    MetricFeasibility ak = ak_feasibility(j, ts);
    CHECK(ak.feasible == is_integrable(j, ts));
    if (!ak.feasible) continue;
    InvariantMetric g(ak.sample);
    for (const auto& t : ts.triples()) CHECK(kahler_triple_sum(g, j, ts, t).is_zero());
  }
}

TEST_CASE("G1 direct test against the tensor oracle") {
  FlagSpec f = FlagSpec::parse("A3");
  TRootSystem ts(f);
  StructureConstants sc = compute_structure_constants(f.root_system_ptr());
  for (const auto& j : enumerate_iacs(ts))
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        InvariantMetric g({a, b, 1, 2, a, b});
        CHECK(is_g1(g, j, ts) == g1_oracle(ts, sc, g, j));
      }
}

TEST_CASE("inclusion is necessary but not sufficient for G1") {
  TRootSystem ts(FlagSpec::parse("B3"));
  for (std::uint64_t m = 0; m < 64; ++m)
    for (int v = 0; v < 512; ++v) {
      std::vector<Rational> l(ts.s());
      for (int k = 0; k < ts.s(); ++k) l[k] = 1 + ((v >> k) & 1);
      InvariantMetric g(l);
      IACS j(ts.s(), m);
      if (is_g1(g, j, ts)) CHECK(g1_by_inclusion(g, j, ts));
    }
  InvariantMetric g({1, 2, 2, 1, 2, 1, 1, 1, 1});
  IACS j(ts.s(), 3);
  CHECK(g1_by_inclusion(g, j, ts));
  CHECK_FALSE(is_g1(g, j, ts));
}

TEST_CASE("normal metric uniqueness with certificates") {
  for (const char* name : {"A2", "A3", "B3 theta=1", "G2"}) {
    TRootSystem ts(FlagSpec::parse(name));
    NormalMetricReport rep = normal_metric_unique(ts);
    CAPTURE(name);
    CHECK(rep.holds);
    CHECK(rep.certificates_valid);
    CHECK(rep.certificates.size() == static_cast<std::size_t>(ts.s() * (ts.s() - 1) / 2));
  }
  TRootSystem ts(FlagSpec::parse("A3"));
  PairCertificate c = normal_metric_unique(ts).certificates.front();
  CHECK_FALSE(validate_certificate(ts, c).has_value());
  c.forcing.front() = IACS(ts.s(), 0);  // all +1 never makes a zero-sum triple (0,3)
  CHECK(validate_certificate(ts, c).has_value());
}

TEST_CASE("two-summand flags") {
  int found = 0;
  for (const auto& t : all_types_up_to(4))
    for (const auto& f : all_flags(std::make_shared<const RootSystem>(t))) {
      TRootSystem ts(f);
      if (ts.s() != 2) continue;
      Coords twice = ts.t_root(0).coords;
      for (int& x : twice) x *= 2;
      if (ts.t_root(1).coords != twice) continue;
      ++found;
      CHECK_FALSE(is_integrable(IACS::from_signs({-1, 1}), ts));
      CHECK(is_integrable(IACS::from_signs({1, 1}), ts));
    }
  CHECK(found > 0);
}

TEST_CASE("zero-sum t-root triples lift to roots") {
  for (const auto& t : all_types_up_to(3))
    for (const auto& f : all_flags(std::make_shared<const RootSystem>(t))) CHECK(check_triple_lifts(TRootSystem(f)).holds);
}
