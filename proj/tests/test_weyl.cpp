#include <algorithm>

#include "doctest.h"
#include "flagclass/weyl.hpp"
#include "oracles.hpp"

using namespace flagclass;

TEST_CASE("group orders against the closed forms") {
  for (const auto& t : all_types_up_to(4)) {
    WeylGroup w = generate_weyl(std::make_shared<const RootSystem>(t));
    CAPTURE(t.str());
    CHECK(w.order() == oracle::weyl_order(t));
    CHECK(weyl_order(t) == oracle::weyl_order(t));
  }
  WeylGroup e6 = generate_weyl(std::make_shared<const RootSystem>(LieType::parse("E6")));
  CHECK(e6.order() == 51840);
}

TEST_CASE("cap is enforced before generation") {
  auto rs = std::make_shared<const RootSystem>(LieType::parse("E8"));
  CHECK_THROWS_AS(generate_weyl(rs), Error);
  CHECK_THROWS_AS(generate_weyl(std::make_shared<const RootSystem>(LieType::parse("A3")), 23), Error);
}

TEST_CASE("group laws") {
  auto rs = std::make_shared<const RootSystem>(LieType::parse("B3"));
  WeylGroup w = generate_weyl(rs);
  for (const auto& g : w.generators()) CHECK((g * g).is_identity());
  for (std::size_t i = 0; i < w.order(); i += 7) {
    const WeylElement& e = w.element(i);
    CHECK((e * e.inverse()).is_identity());
    for (int r = 0; r < rs->size(); ++r) CHECK(e(rs->negation(r)) == rs->negation(e(r)));
  }
  int longest = 0;
  for (std::size_t i = 0; i < w.order(); ++i) longest = std::max(longest, w.word_length(i));
  CHECK(longest == rs->num_positive());
}

TEST_CASE("A_Theta is the stabilizer of R_Theta") {
  auto rs = std::make_shared<const RootSystem>(LieType::parse("A3"));
  WeylGroup w = generate_weyl(rs);
  AThetaResult at = a_theta(w, make_flag(rs, {2, 3}));
  CHECK(at.r_m_criterion_holds);
  CHECK(at.members.size() == 6);
  CHECK(a_theta(w, make_flag(rs, {})).members.size() == 24);
}

TEST_CASE("action on the A2 full flag") {
  FlagSpec f = FlagSpec::parse("A2");
  TRootSystem ts(f);
  WeylElement s1 = WeylElement::simple_reflection(f.root_system(), 1);
  CHECK(act_on_iacs(s1, ts, IACS::from_signs({1, 1, -1})).signs() == std::vector<int>{-1, -1, 1});
  InvariantMetric g({1, 2, 3});
  CHECK(act_on_metric(s1, ts, g).lambdas() == std::vector<Rational>{1, 3, 2});

  WeylGroup w = generate_weyl(f.root_system_ptr());
  std::vector<std::pair<IACS, InvariantMetric>> list;
  for (const auto& j : enumerate_iacs(ts)) list.emplace_back(j, InvariantMetric::normal(3));
  OrbitPartition p = orbits(w.elements(), ts, list);
  auto sizes = p.sizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 6});
}

TEST_CASE("elements outside A_Theta do not act") {
  FlagSpec f = FlagSpec::parse("A3 theta=2,3");
  TRootSystem ts(f);
  WeylElement s1 = WeylElement::simple_reflection(f.root_system(), 1);
  CHECK_THROWS_AS(act_on_iacs(s1, ts, IACS(1, 0)), Error);
}
