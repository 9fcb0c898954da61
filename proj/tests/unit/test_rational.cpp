#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <walkgauge/rational.hpp>

using walkgauge::Integer;
using walkgauge::Rational;

TEST_CASE("rational construction canonicalizes") {
  CHECK(Rational() == Rational(0));
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).denominator() == 2);  // denominator kept positive
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(Integer(10), Integer(5)) == Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), walkgauge::DivisionByZeroError);
}

TEST_CASE("rational accepts gmp expression templates") {
  // Products and sums of Integer values arrive as unevaluated gmp
  // expressions; they must convert exactly, not ambiguously.
  Integer a = 6, b = 7;
  CHECK(Rational(a * b) == Rational(42));
  CHECK(Rational(a + b, a - b) == Rational(-13));
  Rational acc(0);
  acc += Rational(a * a - b);
  CHECK(acc == Rational(29));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_string("3/6") == Rational(1, 2));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("0/5") == Rational(0));
  CHECK(Rational::from_string("-22/55") == Rational(-2, 5));
  CHECK_THROWS_AS(Rational::from_string(""), walkgauge::ParseError);
  CHECK_THROWS_AS(Rational::from_string("abc"), walkgauge::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/"), walkgauge::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), walkgauge::DivisionByZeroError);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 4) == Rational(-3, 4));
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), walkgauge::DivisionByZeroError);

  // A long alternating sum that floating point could not do exactly.
  Rational sum(0);
  for (int k = 1; k <= 60; ++k) sum += Rational((k % 2 == 0) ? -1 : 1, k);
  Rational check(0);
  for (int k = 60; k >= 1; --k) check += Rational((k % 2 == 0) ? -1 : 1, k);
  CHECK(sum == check);
}

TEST_CASE("rational predicates and accessors") {
  Rational q(10, 4);
  CHECK(q.numerator() == 5);
  CHECK(q.denominator() == 2);
  CHECK_FALSE(q.is_integer());
  CHECK(Rational(8, 4).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-1, 9).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(7).sign() == 1);
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2) > Rational(3, 2));
  CHECK(Rational(4, 8) <= Rational(1, 2));
  std::vector<Rational> v = {Rational(1, 2), Rational(-3), Rational(5, 3), Rational(0)};
  std::sort(v.begin(), v.end());
  CHECK(v.front() == Rational(-3));
  CHECK(v.back() == Rational(5, 3));
}

TEST_CASE("rational formatting") {
  CHECK(Rational(5, 3).str() == "5/3");
  CHECK(Rational(-5, 3).str() == "-5/3");
  CHECK(Rational(4).str() == "4");
  CHECK(walkgauge::to_string(Rational(9, 6)) == "3/2");
  CHECK(walkgauge::to_string(Integer(-12)) == "-12");
  CHECK(Rational(1, 2).approx() == 0.5);
  CHECK(Rational(1, 3).approx() == Catch::Approx(1.0 / 3.0));
}
