#include <random>

#include "dio/resultant.hpp"
#include "dio/roots.hpp"
#include "doctest.h"

using namespace dio;

namespace {

UniPoly up(std::vector<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.push_back(Rational(c));
  return UniPoly(std::move(v));
}

// independent oracle: enumerate every rational-root-theorem candidate of the
// integer-scaled polynomial by brute force and test each by evaluation
std::vector<Rational> brute_force_roots(const UniPoly& p) {
  Integer den_lcm = 1;
  for (const Rational& r : p.coeffs()) den_lcm = lcm(den_lcm, r.denominator());
  std::vector<Integer> c;
  for (const Rational& r : p.coeffs()) c.push_back(r.numerator() * (den_lcm / r.denominator()));
  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  std::vector<Rational> out;
  if (low > 0) out.push_back(Rational(0));
  c.erase(c.begin(), c.begin() + low);
  if (c.size() <= 1) return out;
  for (const Integer& nd : divisors(c.front()))
    for (const Integer& dd : divisors(c.back()))
      for (int s : {1, -1}) {
        Rational cand(s * nd, dd);
        if (p.eval(cand).is_zero()) out.push_back(cand);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  UniPoly x = UniPoly::variable();
  UniPoly p = x * x - UniPoly(1);
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(3)) == Rational(8));
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == Rational(2) * x);
  auto [q, r] = divmod(p, x - UniPoly(1));
  CHECK(q == x + UniPoly(1));
  CHECK(r.is_zero());
  CHECK(gcd(p, x - UniPoly(1)) == x - UniPoly(1));
}

TEST_CASE("rational_roots on the named cases") {
  CHECK(rational_roots(up({-1, 0, 1})) == std::vector<Rational>{Rational(-1), Rational(1)});

  // X^4 - 8X^3 - 8X - 8: every divisor candidate fails
  CHECK(rational_roots(up({-8, -8, 0, -8, 1})).empty());

  // the circle sweep quadratic at m = 10: 101 x^2 + 200 x + 99
  auto roots = rational_roots(up({99, 200, 101}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-1));
  CHECK(roots[1] == Rational(Integer(-99), Integer(101)));

  CHECK_THROWS_AS(rational_roots(UniPoly()), domain_error);
}

TEST_CASE("rational_roots matches the brute-force oracle on random polynomials") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<long> coeff(-12, 12);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<long> cs(1 + trial % 6, 0);
    for (auto& c : cs) c = coeff(rng);
    cs.push_back(1 + std::abs(coeff(rng)));
    UniPoly p(up(cs));
    if (p.is_zero()) continue;
    auto fast = rational_roots(p);
    auto slow = brute_force_roots(p);
    CHECK(fast == slow);
    for (const Rational& r : fast) CHECK(p.eval(r).is_zero());
  }
}

TEST_CASE("resultant via the Sylvester determinant") {
  UniPoly x = UniPoly::variable();
  CHECK(resultant(x - UniPoly(1), x + UniPoly(1)) == Rational(2));
  CHECK(resultant(x * x + UniPoly(1), Rational(2) * x) == Rational(4));
  CHECK(resultant(x, x) == Rational(0));
  CHECK_THROWS_AS(resultant(UniPoly(), UniPoly()), domain_error);
}

TEST_CASE("discriminant over the rationals") {
  UniPoly x = UniPoly::variable();
  CHECK(discriminant(x * x + UniPoly(1)) == Rational(-4));          // b^2-4c = -4
  CHECK(discriminant(x * x - x + UniPoly(2)) == Rational(-7));      // 1 - 8
  CHECK(discriminant(x * x * x - x) == Rational(4));                // 4a^3 route: -4(-1)^3
  CHECK_THROWS_AS(discriminant(Rational(2) * x * x), domain_error);  // non-monic
}

TEST_CASE("discriminant of x^2 - t over Q[t] is 4t") {
  UniPoly t = UniPoly::variable();
  BiPoly f = BiPoly::monomial(UniPoly(1), 2) + BiPoly(UniPoly(-Rational(1)) * t);
  UniPoly disc = discriminant(f);
  CHECK(disc == Rational(4) * t);
}

TEST_CASE("disc(p) = 0 iff gcd(p, p') is nonconstant") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> coeff(-6, 6);
  for (int trial = 0; trial < 80; ++trial) {
    long deg = 2 + trial % 4;
    std::vector<Rational> cs;
    for (long i = 0; i < deg; ++i) cs.push_back(Rational(coeff(rng)));
    cs.push_back(Rational(1));  // monic, degree <= 5
    UniPoly p{cs};
    if (trial % 3 == 0) p = p * p;  // force repeated roots sometimes
    if (!p.is_monic()) continue;
    bool disc_zero = discriminant(p) == Rational(0);
    bool gcd_nonconst = gcd(p, p.derivative()).degree() > 0;
    CHECK(disc_zero == gcd_nonconst);
  }
}
