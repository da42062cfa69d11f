#include "dio/roots.hpp"

#include <algorithm>

#include "dio/numeric.hpp"

namespace dio {

namespace {

// P(num/den) * den^deg, evaluated in integers: Horner with a running
// denominator power folded into each coefficient.
Integer scaled_eval(const std::vector<Integer>& c, const Integer& num, const Integer& den) {
  Integer acc = 0;
  std::vector<Integer> dp(c.size());
  dp[c.size() - 1] = 1;
  for (size_t i = c.size() - 1; i-- > 0;) dp[i] = dp[i + 1] * den;
  for (size_t i = c.size(); i-- > 0;) acc = acc * num + c[i] * dp[i];
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw domain_error("indeterminate roots: zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() == 0) return roots;

  // Scale to primitive integer coefficients.
  Integer den_lcm = 1;
  for (const Rational& r : p.coeffs()) den_lcm = lcm(den_lcm, r.denominator());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const Rational& r : p.coeffs())
    c.push_back(r.numerator() * (den_lcm / r.denominator()));
  Integer content = 0;
  for (const Integer& a : c) content = gcd(content, a);
  for (Integer& a : c) a /= content;

  // Strip powers of x; 0 is a root iff the constant term vanished.
  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + low);
  }
  if (c.size() <= 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  const Integer a0 = c.front(), an = c.back();
  const size_t deg = c.size() - 1;

  auto try_root = [&](const Rational& cand) {
    if (scaled_eval(c, cand.numerator(), cand.denominator()) == 0) roots.push_back(cand);
  };

  // Binomial a_n x^n + a_0: the only candidates are exact n-th roots of
  // -a0/an, so skip divisor enumeration (keeps huge constants cheap).
  bool binomial = true;
  for (size_t i = 1; i < deg; ++i)
    if (c[i] != 0) binomial = false;
  if (binomial) {
    Rational t = Rational(-a0, an);
    Integer rn, rd;
    if (nth_root_exact(t.numerator(), deg, rn) && nth_root_exact(t.denominator(), deg, rd)) {
      try_root(Rational(rn, rd));
      if (deg % 2 == 0) try_root(Rational(-rn, rd));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  const Integer p1 = scaled_eval(c, 1, 1);    // P(1)
  const Integer pm1 = scaled_eval(c, -1, 1);  // P(-1)
  for (const Integer& nd : divisors(a0)) {
    for (const Integer& dd : divisors(an)) {
      if (gcd(nd, dd) != 1) continue;
      for (int s : {1, -1}) {
        Integer num = s * nd;
        // classic filters: (num - den) | P(1) and (num + den) | P(-1)
        if (p1 != 0 && num != dd && p1 % (num - dd) != 0) continue;
        if (pm1 != 0 && num != -dd && pm1 % (num + dd) != 0) continue;
        try_root(Rational(num, dd));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace dio
