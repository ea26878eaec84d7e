#include "doctest.h"
#include "flagclass/chevalley.hpp"
#include "oracles.hpp"

using namespace flagclass;

TEST_CASE("root counts match the closed forms up to rank 8") {
  for (const auto& t : all_types_up_to(8)) {
    RootSystem rs(t);
    CAPTURE(t.str());
    CHECK(rs.size() == oracle::root_count(t));
    CHECK(closed_form_root_count(t) == oracle::root_count(t));
  }
}

TEST_CASE("canonical order and negation") {
  RootSystem rs(LieType::parse("A2"));
  REQUIRE(rs.size() == 6);
  CHECK(rs.root(0).coords() == Coords{1, 0});
  CHECK(rs.root(1).coords() == Coords{0, 1});
  CHECK(rs.root(2).coords() == Coords{1, 1});
  for (int i = 0; i < rs.size(); ++i) CHECK(rs.root(rs.negation(i)) == -rs.root(i));
}

TEST_CASE("long roots have squared length 2") {
  for (const auto& t : all_types_up_to(8)) {
    RootSystem rs(t);
    Rational longest(0);
    for (int i = 0; i < rs.size(); ++i) longest = std::max(longest, rs.norm2(i));
    CHECK(longest == Rational(2));
  }
}

TEST_CASE("root strings agree with a coordinate walk") {
  for (const auto& t : all_types_up_to(4)) {
    RootSystem rs(t);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        if (b == a || b == rs.negation(a)) continue;
        auto [p, q] = rs.root_string(rs.root(a), rs.root(b));
        auto [p2, q2] = oracle::root_string(rs, rs.root(a).coords(), rs.root(b).coords());
        CHECK(p == p2);
        CHECK(q == q2);
        CHECK(p - q == rs.cartan_integer(rs.root(b), rs.root(a)));
      }
  }
}

TEST_CASE("invalid types") {
  CHECK_THROWS_AS(LieType::parse("D3"), Error);
  CHECK_THROWS_AS(LieType::parse("E9"), Error);
  CHECK_THROWS_AS(LieType::parse("Q2"), Error);
  CHECK(LieType::parse("g2").str() == "G2");
}

TEST_CASE("structure constant magnitudes are p + 1") {
  for (const auto& t : all_types_up_to(6)) {
    auto rs = std::make_shared<const RootSystem>(t);
    StructureConstants sc = compute_structure_constants(rs);
    for (int a = 0; a < rs->size(); ++a)
      for (int b = 0; b < rs->size(); ++b) {
        if (rs->sum_index(a, b) < 0) continue;
        int p = oracle::root_string(*rs, rs->root(a).coords(), rs->root(b).coords()).first;
        CHECK(std::abs(sc.chevalley(a, b)) == p + 1);
      }
  }
}

TEST_CASE("Jacobi holds and a flipped sign is caught") {
  for (const auto& t : all_types_up_to(4)) {
    StructureConstants sc = compute_structure_constants(std::make_shared<const RootSystem>(t));
    CHECK(verify_jacobi(sc).holds);
    CHECK(check_table_invariants(sc).holds);
  }
  StructureConstants sc = compute_structure_constants(std::make_shared<const RootSystem>(LieType::parse("B3")));
  auto [a, b] = sc.extraspecial_pairs().back();
  StructureConstants bad = sc.with_flipped_entry(a, b);
  JacobiResult jr = verify_jacobi(bad);
  CHECK_FALSE(jr.holds);
  CHECK(jr.counterexample.has_value());
}

TEST_CASE("cyclic identity on zero-sum triples after rescaling") {
  for (const auto& t : all_types_up_to(4)) {
    auto rs = std::make_shared<const RootSystem>(t);
    StructureConstants sc = compute_structure_constants(rs);
    for (int a = 0; a < rs->size(); ++a)
      for (int b = 0; b < rs->size(); ++b) {
        int s = rs->sum_index(a, b);
        if (s < 0) continue;
        int c = rs->negation(s);
        CHECK(sc.weyl(a, b) == sc.weyl(b, c));
        CHECK(sc.weyl(b, c) == sc.weyl(c, a));
      }
  }
}
