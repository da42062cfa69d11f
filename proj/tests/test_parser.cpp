#include <random>

#include "dio/equation.hpp"
#include "doctest.h"

using namespace dio;

TEST_CASE("parsing normalizes both sides onto the lhs") {
  Equation a = parse_equation("x^2+y^2=1");
  Equation b = parse_equation("x^2+y^2-1=0");
  CHECK(a == b);
  CHECK(a.variables == std::vector<std::string>{"x", "y"});
  CHECK(a.degree() == 2);

  Equation cubic = parse_equation("x^3+y^3=1729");
  CHECK(cubic.lhs.coeff({}) == Rational(-1729));
  CHECK(cubic.lhs.coeff({{"x", 3}}) == Rational(1));
}

TEST_CASE("syntax errors carry the offset") {
  try {
    parse_equation("x^+1");
    FAIL("expected parse error");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_equation(""), parse_error);
  CHECK_THROWS_AS(parse_equation("  "), parse_error);
  CHECK_THROWS_AS(parse_equation("2x"), parse_error);      // juxtaposition rejected
  CHECK_THROWS_AS(parse_equation("x^2=1=2"), parse_error); // one '=' only
  CHECK_THROWS_AS(parse_equation("x$y"), parse_error);
  CHECK_THROWS_AS(parse_equation("1/0"), parse_error);
  CHECK_THROWS_AS(parse_equation("(x"), parse_error);
  CHECK_THROWS_AS(parse_equation("x^y"), parse_error);
}

TEST_CASE("precedence: ^ over unary minus over * over +") {
  // -2^2 = -(2^2)
  CHECK(parse_equation("-2^2+4").lhs.is_zero());
  // -1/2*x parses as (-1/2) * x
  Equation e = parse_equation("-1/2*x");
  CHECK(e.lhs.coeff({{"x", 1}}) == Rational(Integer(-1), Integer(2)));
  // fraction literals
  CHECK(parse_equation("3/4-3/4").lhs.is_zero());
  CHECK(parse_equation("2*(x+1)-2*x-2").lhs.is_zero());
}

TEST_CASE("canonical printing round-trips") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> expn(0, 4);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 150; ++trial) {
    MultiPoly p;
    for (int t = 0; t < 5; ++t) {
      MultiPoly term(Rational(Integer(coeff(rng)), Integer(1 + (trial % 4))));
      for (int v = 0; v < 3; ++v) {
        int e = expn(rng);
        if (e > 0) term = term * MultiPoly::variable(vars[v]).pow(e);
      }
      p = p + term;
    }
    Equation eq;
    eq.lhs = p;
    Equation back = parse_equation(p.to_string() + "=0");
    CHECK(back.lhs == p);
  }
}

TEST_CASE("is_point agrees with known solutions") {
  Equation pyth = parse_equation("x^2+y^2=z^2");
  CHECK(is_point(pyth, {{"x", Rational(99)}, {"y", Rational(20)}, {"z", Rational(101)}}));
  Equation taxi = parse_equation("x^3+y^3=1729");
  CHECK(is_point(taxi, {{"x", Rational(9)}, {"y", Rational(10)}}));
  Equation circle = parse_equation("x^2+y^2=1");
  CHECK_FALSE(is_point(circle, {{"x", Rational(1)}, {"y", Rational(1)}}));
  CHECK_THROWS_WITH_AS(is_point(circle, {{"x", Rational(1)}}),
                       doctest::Contains("y"), domain_error);
}

TEST_CASE("is_point matches an independent evaluator on random assignments") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> val(-6, 6);
  Equation eq = parse_equation("x^2*y-3*y^2+x-7");
  for (int i = 0; i < 100; ++i) {
    Rational x(val(rng)), y(val(rng));
    // direct substitution, written without MultiPoly
    Rational direct = x * x * y - Rational(3) * y * y + x - Rational(7);
    CHECK(is_point(eq, {{"x", x}, {"y", y}}) == direct.is_zero());
  }
}

TEST_CASE("integer point search") {
  Equation circle = parse_equation("x^2+y^2=1");
  auto pts = search_integer_points(circle, 1);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == std::vector<Integer>{-1, 0});
  CHECK(pts[1] == std::vector<Integer>{0, -1});
  CHECK(pts[2] == std::vector<Integer>{0, 1});
  CHECK(pts[3] == std::vector<Integer>{1, 0});

  Equation taxi = parse_equation("x^3+y^3=1729");
  auto tpts = search_integer_points(taxi, 12);
  REQUIRE(tpts.size() == 4);
  CHECK(tpts[0] == std::vector<Integer>{1, 12});
  CHECK(tpts[1] == std::vector<Integer>{9, 10});
  CHECK(tpts[2] == std::vector<Integer>{10, 9});
  CHECK(tpts[3] == std::vector<Integer>{12, 1});
  // symmetry: the equation is symmetric in x and y
  for (const auto& p : tpts) {
    bool found = false;
    for (const auto& q : tpts) found = found || (q[0] == p[1] && q[1] == p[0]);
    CHECK(found);
  }

  CHECK(search_integer_points(parse_equation("x^2+y^2+1"), 10).empty());

  CHECK_THROWS_AS(search_integer_points(parse_equation("a+b+c+d+e"), 1), domain_error);
  CHECK_THROWS_AS(search_integer_points(circle, -1), domain_error);
}
