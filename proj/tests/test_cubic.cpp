#include "dio/cubic.hpp"
#include "doctest.h"

using namespace dio;

namespace {

Rational rat(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

const DiagonalCubic taxicab{rat(1729)};

}  // namespace

TEST_CASE("tangent line at (9,10) on x^3 + y^3 = 1729") {
  TangentLine line = tangent_line(taxicab, {rat(9), rat(10)});
  CHECK(line.A == 81);
  CHECK(line.B == 100);
}

TEST_CASE("tangent step reproduces the taxicab descent point") {
  RatPoint next = tangent_step(taxicab, {rat(9), rat(10)});
  CHECK(next.x == Rational::from_string("-42465969/468559"));
  CHECK(next.y == Rational::from_string("24580/271"));
  CHECK(taxicab.contains(next));
}

TEST_CASE("tangent step certifies a double root") {
  // the substituted cubic must be divisible by (x - x_P)^2 exactly
  RatPoint P{rat(9), rat(10)};
  Rational s = -(P.x * P.x) / (P.y * P.y);
  Rational t = P.y - s * P.x;
  UniPoly x = UniPoly::variable();
  UniPoly line = UniPoly(t) + UniPoly(s) * x;
  UniPoly cubic = x.pow(3) + line.pow(3) - UniPoly(taxicab.c);
  UniPoly factor = (x - UniPoly(P.x)) * (x - UniPoly(P.x));
  auto [q, r] = divmod(cubic, factor);
  CHECK(r.is_zero());
  CHECK(q.degree() == 1);
}

TEST_CASE("tangent step from (1,12) stays on the curve") {
  RatPoint next = tangent_step(taxicab, {rat(1), rat(12)});
  CHECK(taxicab.contains(next));
  CHECK_FALSE(next == RatPoint{rat(1), rat(12)});
}

TEST_CASE("vertical tangent at y = 0 via the coordinate swap") {
  // on x^3 + y^3 = 8 the tangent at (2,0) is the vertical line x = 2, which
  // meets the curve only there (with multiplicity three)
  DiagonalCubic eight{rat(8)};
  TangentLine line = tangent_line(eight, {rat(2), rat(0)});
  CHECK(line.A == 1);
  CHECK(line.B == 0);
  CHECK(tangent_step(eight, {rat(2), rat(0)}) == RatPoint{rat(2), rat(0)});
}

TEST_CASE("tangent step hits the flex at infinity on x^3 + y^3 = 2") {
  DiagonalCubic two{rat(2)};
  CHECK_THROWS_WITH_AS(tangent_step(two, {rat(1), rat(1)}),
                       doctest::Contains("infinity"), domain_error);
}

TEST_CASE("secant step on the taxicab curve") {
  RatPoint r = secant_step(taxicab, {rat(1), rat(12)}, {rat(9), rat(10)});
  CHECK(r.x == rat(-37, 3));
  CHECK(r.y == rat(46, 3));
  CHECK(taxicab.contains(r));

  CHECK_THROWS_WITH_AS(secant_step(taxicab, {rat(9), rat(10)}, {rat(10), rat(9)}),
                       doctest::Contains("infinity"), domain_error);
  CHECK_THROWS_WITH_AS(secant_step(DiagonalCubic{rat(2)}, {rat(1), rat(1)}, {rat(1), rat(1)}),
                       doctest::Contains("tangent"), domain_error);
}

TEST_CASE("off-curve points are rejected") {
  CHECK_THROWS_AS(tangent_step(taxicab, {rat(1), rat(1)}), domain_error);
  CHECK_THROWS_AS(secant_step(taxicab, {rat(1), rat(1)}, {rat(9), rat(10)}), domain_error);
  CHECK_THROWS_AS(tangent_line(taxicab, {rat(0), rat(0)}), domain_error);
}

TEST_CASE("weierstrass model of the taxicab curve") {
  auto [curve, img] = to_weierstrass(taxicab, {rat(9), rat(10)});
  CHECK(curve.a == rat(0));
  CHECK(curve.b == Rational(Integer(Integer(-432) * Integer(1729) * Integer(1729))));
  CHECK(img.x == rat(1092));
  CHECK(img.y == rat(-3276));
  CHECK(on_curve(curve, img));
  CHECK(from_weierstrass(taxicab, img) == RatPoint{rat(9), rat(10)});

  // second example: image of the descent point, verified by substitution
  RatPoint p2 = tangent_step(taxicab, {rat(9), rat(10)});
  auto [curve2, img2] = to_weierstrass(taxicab, p2);
  CHECK(on_curve(curve2, img2));
  CHECK(from_weierstrass(taxicab, img2) == p2);

  DiagonalCubic two{rat(2)};
  auto [wc, wp] = to_weierstrass(two, {rat(1), rat(1)});
  CHECK(wp.x == rat(12));
  CHECK(wp.y == rat(0));
  CHECK(wc.b == rat(-1728));
  CHECK(on_curve(wc, wp));

  CHECK_THROWS_WITH_AS(to_weierstrass(DiagonalCubic{rat(35)}, {rat(1), rat(1)}),
                       doctest::Contains("on the cubic"), domain_error);
  // x + y = 0 never happens on x^3+y^3=c with c != 0, so exercise the guard
  // via the inverse map instead
  CHECK_THROWS_AS(from_weierstrass(taxicab, CurvePoint::O()), domain_error);
}

TEST_CASE("tangent iterates map to non-torsion Weierstrass points") {
  // the first iterate's image is still integral, so divisibility (not mere
  // integrality) is what certifies its infinite order
  RatPoint P{rat(9), rat(10)};
  for (int k = 0; k < 3; ++k) {
    P = tangent_step(taxicab, P);
    auto [curve, img] = to_weierstrass(taxicab, P);
    CHECK_FALSE(nagell_lutz_test(curve, img).torsion);
    if (k == 0) {
      CHECK(img.x.is_integer());
      CHECK(img.y.is_integer());
      CHECK(nagell_lutz_test(curve, img).certificate ==
            "y^2 does not divide the discriminant");
    }
  }
}

TEST_CASE("tangent iterates grow in height and stay on the curve") {
  RatPoint P{rat(9), rat(10)};
  std::vector<RatPoint> iterates;
  for (int k = 0; k < 5; ++k) {
    P = tangent_step(taxicab, P);
    CHECK(taxicab.contains(P));
    iterates.push_back(P);
  }
  for (size_t i = 0; i < iterates.size(); ++i)
    for (size_t j = i + 1; j < iterates.size(); ++j)
      CHECK_FALSE(iterates[i] == iterates[j]);
  size_t prev_bits = 0;
  for (const auto& pt : iterates) {
    Integer den = lcm(pt.x.denominator(), pt.y.denominator());
    size_t bits = mpz_sizeinbase(den.get_mpz_t(), 2);
    CHECK(bits > prev_bits);
    prev_bits = bits;
  }
}
