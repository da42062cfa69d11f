#include "dio/cubic.hpp"

namespace dio {

namespace {

void require_on_curve(const DiagonalCubic& curve, const RatPoint& P) {
  if (!curve.contains(P)) throw domain_error("point is not on the cubic");
}

// Third intersection of y = s x + t with x^3 + y^3 = c, where the substituted
// cubic already has known roots x_P and x_Q (equal for a tangent).
RatPoint third_intersection(const Rational& s, const Rational& t, const Rational& xP,
                            const Rational& xQ) {
  // (1 + s^3) x^3 + 3 s^2 t x^2 + 3 s t^2 x + t^3 - c
  Rational a3 = Rational(1) + s.pow(3);
  if (a3.is_zero()) throw domain_error("third point at infinity");
  Rational a2 = Rational(3) * s * s * t;
  Rational x2 = -a2 / a3 - xP - xQ;
  return {x2, s * x2 + t};
}

}  // namespace

TangentLine tangent_line(const DiagonalCubic& curve, const RatPoint& P) {
  require_on_curve(curve, P);
  // gradient (3x^2, 3y^2), cleared to a primitive integer vector
  Rational gx = Rational(3) * P.x * P.x;
  Rational gy = Rational(3) * P.y * P.y;
  Integer den = lcm(gx.denominator(), gy.denominator());
  Integer A = gx.numerator() * (den / gx.denominator());
  Integer B = gy.numerator() * (den / gy.denominator());
  Integer g = gcd(A, B);
  if (g != 0) {
    A /= g;
    B /= g;
  }
  if (A < 0 || (A == 0 && B < 0)) {
    A = -A;
    B = -B;
  }
  return {P, A, B};
}

RatPoint tangent_step(const DiagonalCubic& curve, const RatPoint& P) {
  require_on_curve(curve, P);
  if (P.y.is_zero()) {
    // vertical tangent; the curve is symmetric in x and y, so swap
    RatPoint swapped{P.y, P.x};
    Rational s = -(swapped.x * swapped.x) / (swapped.y * swapped.y);
    RatPoint r = third_intersection(s, swapped.y - s * swapped.x, swapped.x, swapped.x);
    return {r.y, r.x};
  }
  Rational s = -(P.x * P.x) / (P.y * P.y);
  return third_intersection(s, P.y - s * P.x, P.x, P.x);
}

RatPoint secant_step(const DiagonalCubic& curve, const RatPoint& P, const RatPoint& Q) {
  require_on_curve(curve, P);
  require_on_curve(curve, Q);
  if (P == Q) throw domain_error("points coincide; use tangent_step");
  // x_P = x_Q with P != Q cannot happen on x^3 + y^3 = c (cubing is
  // injective on rationals), so the secant always has a finite slope.
  Rational s = (Q.y - P.y) / (Q.x - P.x);
  return third_intersection(s, P.y - s * P.x, P.x, Q.x);
}

std::pair<WeierstrassCurve, CurvePoint> to_weierstrass(const DiagonalCubic& curve,
                                                       const RatPoint& P) {
  require_on_curve(curve, P);
  Rational sum = P.x + P.y;
  if (sum.is_zero()) throw domain_error("point maps to infinity");
  Rational u = Rational(12) * curve.c / sum;
  Rational v = Rational(36) * curve.c * (P.x - P.y) / sum;
  WeierstrassCurve w(Rational(0), Rational(-432) * curve.c * curve.c);
  return {w, CurvePoint::affine(u, v)};
}

RatPoint from_weierstrass(const DiagonalCubic& curve, const CurvePoint& P) {
  if (P.identity) throw domain_error("identity has no affine preimage");
  if (P.x.is_zero()) throw domain_error("u = 0 does not correspond to an affine point");
  Rational c36 = Rational(36) * curve.c;
  Rational den = Rational(6) * P.x;
  return {(c36 + P.y) / den, (c36 - P.y) / den};
}

}  // namespace dio
