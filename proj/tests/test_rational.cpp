#include <catch2/catch_amalgamated.hpp>

#include "seminorm_lab/rational.hpp"

using namespace seminorm_lab;

TEST_CASE("rational construction and exactness") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7) * Rational(1, 7) == 1);
  // 0.1 + 0.2 style pitfall: exact arithmetic has no drift.
  Rational tenth(1, 10);
  Rational sum(0);
  for (int i = 0; i < 10; ++i) sum += tenth;
  CHECK(sum == 1);
}

TEST_CASE("abs_val and pow2") {
  CHECK(abs_val(Rational(-3, 4)) == Rational(3, 4));
  CHECK(abs_val(Rational(3, 4)) == Rational(3, 4));
  CHECK(abs_val(Rational(0)) == 0);
  CHECK(pow2(0) == 1);
  CHECK(pow2(3) == 8);
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(-10) == Rational(1, 1024));
}

TEST_CASE("format_rational") {
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(-7)) == "-7");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("5") == 5);
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-12") == -12);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("parse and format round trip") {
  for (const char* text : {"0", "1", "-1", "1/2", "-22/7", "1000000007"}) {
    CHECK(format_rational(parse_rational(text)) == text);
  }
}

TEST_CASE("approx") {
  CHECK(approx(Rational(1, 2)) == 0.5);
  CHECK(approx(Rational(-1, 4)) == -0.25);
  CHECK(approx(Rational(0)) == 0.0);
}
