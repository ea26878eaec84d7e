#include "doctest.h"
#include "flagclass/flag.hpp"
#include "flagclass/tzs.hpp"
#include "oracles.hpp"

using namespace flagclass;

namespace {
std::shared_ptr<const RootSystem> sys(const char* t) { return std::make_shared<const RootSystem>(LieType::parse(t)); }
}  // namespace

TEST_CASE("flag parsing and naming") {
  FlagSpec f = FlagSpec::parse("A3 theta=2,3");
  CHECK(f.sigma_m() == std::vector<int>{1});
  CHECK(f.painted() == "A3 : paint 1");
  CHECK(f.file_stem() == "A3_theta_2_3");
  CHECK(FlagSpec::parse("A2").file_stem() == "A2_theta_none");
  FlagSpec g = make_flag_from_paint(sys("A4"), {3});
  CHECK(g.theta() == std::vector<int>{1, 2, 4});
  CHECK_THROWS_AS(FlagSpec::parse("A1 theta=1"), Error);
  CHECK_THROWS_AS(FlagSpec::parse("A2 theta=3"), Error);
}

TEST_CASE("flag counts per type") {
  CHECK(all_flags(sys("A1")).size() == 1);
  CHECK(all_flags(sys("G2")).size() == 3);
  CHECK(all_flags(sys("E6")).size() == 63);
}

TEST_CASE("isotropy irreducible A3 flag") {
  TRootSystem ts(FlagSpec::parse("A3 theta=2,3"));
  CHECK(ts.s() == 1);
  CHECK(ts.summand_dim(0) == 3);
  CHECK(ts.triples().empty());
  CHECK(connectivity(ts.functionals()).connected);
}

TEST_CASE("A2 full flag t-roots") {
  TRootSystem ts(FlagSpec::parse("A2"));
  REQUIRE(ts.s() == 3);
  CHECK(ts.t_root(0).coords == Coords{1, 0});
  CHECK(ts.t_root(1).coords == Coords{0, 1});
  CHECK(ts.t_root(2).coords == Coords{1, 1});
  CHECK(ts.triples().size() == 2);
}

TEST_CASE("positive t-root counts and triple counts by brute force") {
  for (const auto& t : all_types_up_to(4))
    for (const auto& f : all_flags(std::make_shared<const RootSystem>(t))) {
      TRootSystem ts(f);
      CAPTURE(f.str());
      CHECK(ts.s() == oracle::positive_t_root_count(f));
      std::vector<Coords> v;
      for (const auto& r : ts.t_roots()) v.push_back(r.coords);
      CHECK(ts.triples().size() == oracle::zero_sum_triple_count(v));
      std::size_t fibers = 0;
      for (int i = 0; i < ts.size(); ++i) fibers += ts.fiber(i).size();
      CHECK(fibers == f.r_m().size());
    }
}

TEST_CASE("zero-sum triples of a root system") {
  RootSystem rs(LieType::parse("B3"));
  FunctionalSet set = FunctionalSet::from_roots(rs);
  std::vector<Coords> v;
  for (const auto& r : rs.roots()) v.push_back(r.coords());
  CHECK(zero_sum_triples(set).size() == oracle::zero_sum_triple_count(v));
}

TEST_CASE("chains validate and a corrupted chain is rejected") {
  RootSystem rs(LieType::parse("C3"));
  FunctionalSet set = FunctionalSet::from_roots(rs);
  TzsChain chain = chain_between(set, rs.root(0).coords(), rs.root(rs.num_positive() - 1).coords());
  CHECK_FALSE(validate_chain(set, chain).has_value());
  REQUIRE(!chain.triples.empty());
  TzsChain broken = chain;
  auto& m = broken.triples.front().members;
  m[0] = set.negation(m[0]);
  CHECK(validate_chain(set, broken).has_value());
}

TEST_CASE("disconnected functional sets are reported") {
  FunctionalSet set({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  ConnectivityReport rep = connectivity(set);
  CHECK_FALSE(rep.connected);
  CHECK(rep.components.size() == 2);
  CHECK_THROWS_AS(chain_between(set, {1, 0}, {0, 1}), Error);
}

TEST_CASE("bridges join painted components through Theta") {
  FlagSpec f = FlagSpec::parse("A4 theta=2,3");
  REQUIRE(sigma_m_components(f).size() == 2);
  Bridge b = bridge_root(f, 1, 2);
  CHECK(b.beta.coords() == Coords{1, 1, 1, 1});
  CHECK(f.root_system().contains(b.beta));
}
