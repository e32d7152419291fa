#include <catch2/catch_amalgamated.hpp>

#include "setsched/rational.hpp"

using setsched::Rational;
using setsched::frac;

TEST_CASE("canonical form and parsing") {
  CHECK(Rational::parse("2/4") == frac(1, 2));
  CHECK(Rational::parse("-6/4") == frac(-3, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("5").str() == "5");
  CHECK(frac(2, 3).str() == "2/3");
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("exact arithmetic and comparisons") {
  Rational a = frac(1, 3), b = frac(1, 6);
  CHECK(a + b == frac(1, 2));
  CHECK(a - b == frac(1, 6));
  CHECK(a * b == frac(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(frac(4, 9) < frac(1, 2));
  CHECK(frac(2, 3) > frac(1, 2));
  CHECK(-a < b);
}

TEST_CASE("floor and ceil") {
  CHECK(frac(7, 2).floor() == 3);
  CHECK(frac(7, 2).ceil() == 4);
  CHECK(frac(-7, 2).floor() == -4);
  CHECK(frac(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("no precision loss across long bisection chains") {
  // Denominators double every step; equality must stay exact.
  Rational lo = 1, hi = 1000;
  for (int k = 0; k < 80; ++k) {
    Rational mid = (lo + hi) * frac(1, 2);
    CHECK(lo < mid);
    CHECK(mid < hi);
    hi = mid;
  }
  CHECK(Rational::parse(hi.str()) == hi);
}

TEST_CASE("string round-trip is the identity", "[property]") {
  setsched::Rational v = frac(-12345, 678);
  for (int k = 0; k < 200; ++k) {
    v = v * frac(7, 5) + frac(1, 3);
    CHECK(Rational::parse(v.str()) == v);
  }
}
