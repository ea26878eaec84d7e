#include <random>

#include "doctest.h"
#include "flagclass/ext_scalar.hpp"
#include "flagclass/rational.hpp"

using namespace flagclass;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-40, 40);
  auto pick = [&] {
    int den = d(rng);
    return Rational(d(rng), den == 0 ? 1 : den);
  };
  for (int i = 0; i < 2000; ++i) {
    Rational a = pick(), b = pick(), c = pick();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(((a < b) == (a.num() * b.den() < b.num() * a.den())));
  }
}

TEST_CASE("rational overflow is reported") {
  Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), Error);
  CHECK_THROWS_AS(big + big, Error);
}

TEST_CASE("square roots in Q(sqrt2, sqrt3)") {
  CHECK(ExtScalar::sqrt_of(Rational(9, 4)) == ExtScalar(Rational(3, 2)));
  CHECK(ExtScalar::sqrt_of(Rational(1, 2)) == ExtScalar::sqrt2().scaled(Rational(1, 2)));
  CHECK(ExtScalar::sqrt_of(Rational(6)) == ExtScalar::sqrt6());
  CHECK(ExtScalar::sqrt2() * ExtScalar::sqrt3() == ExtScalar::sqrt6());
  CHECK(ExtScalar::sqrt6().squared() == ExtScalar(6));
  CHECK_THROWS_AS(ExtScalar::sqrt_of(Rational(5)), Error);
  CHECK_THROWS_AS(ExtScalar::sqrt_of(Rational(-1)), Error);
  ExtScalar x = ExtScalar(2) + ExtScalar::sqrt3();
  CHECK((x * (ExtScalar(2) - ExtScalar::sqrt3())) == ExtScalar(1));
  CHECK((x - x).is_zero());
}
