#include <catch2/catch_amalgamated.hpp>

#include "lgf/rational.hpp"

using lgf::Rational;

TEST_CASE("construction reduces to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0, 1));
  CHECK(Rational(30, 13).num == 30);
  CHECK(Rational(30, 13).den == 13);
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).num == -1);
  CHECK(Rational(2, -4).den == 2);
}

TEST_CASE("addition") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) + Rational(2, 3) == Rational(4, 3));
  CHECK(Rational(0) + Rational(7, 5) == Rational(7, 5));
}

TEST_CASE("reciprocal") {
  CHECK(Rational(13, 4).reciprocal() == Rational(4, 13));
  CHECK(Rational(3).reciprocal() == Rational(1, 3));
  CHECK_THROWS_AS(Rational(0).reciprocal(), lgf::Error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(!(Rational(1, 2) < Rational(1, 2)));
  CHECK(Rational(4, 5) < Rational(4, 3));
}

TEST_CASE("string form is num/den") {
  CHECK(Rational(30, 13).str() == "30/13");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(4, 6).str() == "2/3");
}

TEST_CASE("overflow is an error, not a wraparound") {
  Rational big(INT64_MAX, 1);
  CHECK_THROWS_AS(big + big, lgf::Error);
  CHECK_THROWS_AS(Rational(INT64_MAX, 2) + Rational(1, 3), lgf::Error);
}

TEST_CASE("zero denominator rejected") {
  CHECK_THROWS_AS(Rational(1, 0), lgf::Error);
}
