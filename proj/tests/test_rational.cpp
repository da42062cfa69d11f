#include <random>

#include "dio/rational.hpp"
#include "doctest.h"

using namespace dio;

TEST_CASE("rationals are stored reduced with positive denominator") {
  Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0).denominator() == 1);
  CHECK(Rational(Integer(0), Integer(7)).numerator() == 0);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), domain_error);
}

TEST_CASE("arithmetic stays canonical") {
  Rational a(Integer(1), Integer(6)), b(Integer(1), Integer(3));
  Rational s = a + b;
  CHECK(s == Rational(Integer(1), Integer(2)));
  CHECK(s.denominator() == 2);
  CHECK((a - a).is_zero());
  CHECK(a * Rational(6) == Rational(1));
  CHECK_THROWS_AS(a / Rational(0), domain_error);
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("-99/101").to_string() == "-99/101");
  CHECK(Rational::from_string("24580/271").to_string() == "24580/271");
  CHECK(Rational::from_string("7").to_string() == "7");
  CHECK(Rational::from_string("-14/4").to_string() == "-7/2");
  CHECK_THROWS_AS(Rational::from_string("foo"), domain_error);
  CHECK_THROWS_AS(Rational::from_string("1/0"), domain_error);
  CHECK_THROWS_AS(Rational::from_string("1.5"), domain_error);
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  auto rnd = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };
  for (int i = 0; i < 300; ++i) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}
