#include "dio/conic.hpp"

namespace dio {

Conic::Conic(Rational a_, Rational b_, Rational c_, Rational d_, Rational e_, Rational f_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
      e(std::move(e_)), f(std::move(f_)) {
  // det of [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]], scaled by 8
  Rational det = Rational(8) * a * c * f + Rational(2) * b * d * e -
                 Rational(2) * a * e * e - Rational(2) * c * d * d - Rational(2) * f * b * b;
  if (det.is_zero()) throw domain_error("degenerate conic");
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw domain_error("equation has total degree < 2");
}

Conic Conic::from_equation(const Equation& eq) {
  if (eq.variables.size() != 2)
    throw domain_error("conic needs exactly two variables");
  if (eq.lhs.total_degree() != 2)
    throw domain_error("conic needs total degree exactly 2");
  const std::string& X = eq.variables[0];
  const std::string& Y = eq.variables[1];
  return Conic(eq.lhs.coeff({{X, 2}}), eq.lhs.coeff({{X, 1}, {Y, 1}}), eq.lhs.coeff({{Y, 2}}),
               eq.lhs.coeff({{X, 1}}), eq.lhs.coeff({{Y, 1}}), eq.lhs.coeff({}));
}

Rational Conic::eval(const RatPoint& p) const {
  return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f;
}

RatPoint sweep(const Conic& conic, const RatPoint& base, const Slope& m) {
  if (!conic.contains(base)) throw domain_error("base point is not on the conic");
  if (m.is_vertical()) {
    // substitute x = x0; quadratic in y with known root y0
    Rational qa = conic.c;
    Rational qb = conic.b * base.x + conic.e;
    if (qa.is_zero()) throw domain_error("second intersection is at infinity");
    Rational y1 = -qb / qa - base.y;  // Vieta: y0 + y1 = -qb/qa
    return {base.x, y1};
  }
  // substitute y = y0 + m(x - x0); quadratic A x^2 + B x + C with root x0
  const Rational& s = *m.m;
  Rational t = base.y - s * base.x;  // line: y = s x + t
  Rational A = conic.a + conic.b * s + conic.c * s * s;
  Rational B = conic.b * t + Rational(2) * conic.c * s * t + conic.d + conic.e * s;
  if (A.is_zero()) throw domain_error("second intersection is at infinity");
  Rational x1 = -B / A - base.x;
  return {x1, base.y + s * (x1 - base.x)};
}

Slope slope_between(const Conic& conic, const RatPoint& base, const RatPoint& other) {
  if (!conic.contains(base) || !conic.contains(other))
    throw domain_error("both points must lie on the conic");
  if (base == other) throw domain_error("slope undefined; use tangent");
  if (base.x == other.x) return Slope::vertical();
  return Slope::finite((other.y - base.y) / (other.x - base.x));
}

std::array<Integer, 3> pythagorean_triple(const Rational& m) {
  if (m.sign() <= 0 || m == Rational(1)) throw domain_error("degenerate triple");
  Integer a = m.numerator(), b = m.denominator();
  Integer p = abs(b * b - a * a), q = 2 * a * b, r = a * a + b * b;
  Integer g = gcd(gcd(p, q), r);
  return {p / g, q / g, r / g};
}

}  // namespace dio
