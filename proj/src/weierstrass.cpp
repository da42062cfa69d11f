#include "dio/weierstrass.hpp"

#include <algorithm>
#include <set>

#include "dio/roots.hpp"

namespace dio {

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& P) {
  if (P.identity) return true;
  return (P.y * P.y - curve.rhs(P.x)).is_zero();
}

CurvePoint negate(const CurvePoint& P) {
  if (P.identity) return P;
  return CurvePoint::affine(P.x, -P.y);
}

CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& P, const CurvePoint& Q) {
  if (!on_curve(curve, P) || !on_curve(curve, Q))
    throw domain_error("point is not on the curve");
  if (P.identity) return Q;
  if (Q.identity) return P;
  Rational lambda;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return CurvePoint::O();
    // doubling (P == Q, y != 0)
    lambda = (Rational(3) * P.x * P.x + curve.a) / (Rational(2) * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  Rational x3 = lambda * lambda - P.x - Q.x;
  Rational y3 = lambda * (P.x - x3) - P.y;
  return CurvePoint::affine(x3, y3);
}

CurvePoint multiply(const WeierstrassCurve& curve, const Integer& n, const CurvePoint& P) {
  if (!on_curve(curve, P)) throw domain_error("point is not on the curve");
  Integer k = abs(n);
  CurvePoint acc = CurvePoint::O();
  CurvePoint base = P;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = add(curve, acc, base);
    k >>= 1;
    if (k > 0) base = add(curve, base, base);
  }
  return n < 0 ? negate(acc) : acc;
}

namespace {

constexpr int kTorsionOrderBound = 16;  // covers every rational torsion order

// Least k <= bound with [k]P = O, or 0.
int small_order(const WeierstrassCurve& curve, const CurvePoint& P) {
  CurvePoint acc = CurvePoint::O();
  for (int k = 1; k <= kTorsionOrderBound; ++k) {
    acc = add(curve, acc, P);
    if (acc.identity) return k;
  }
  return 0;
}

}  // namespace

NagellLutzVerdict nagell_lutz_test(const WeierstrassCurve& curve, const CurvePoint& P) {
  if (!curve.has_integer_model())
    throw domain_error("clear denominators first: curve coefficients must be integers");
  if (P.identity) return {true, 1, ""};
  if (!on_curve(curve, P)) throw domain_error("point is not on the curve");
  if (!P.x.is_integer()) return {false, 0, "x-coordinate is not integral"};
  if (!P.y.is_integer()) return {false, 0, "y-coordinate is not integral"};
  if (!P.y.is_zero()) {
    Integer y2 = P.y.numerator() * P.y.numerator();
    Integer disc = curve.discriminant().numerator();
    if (disc % y2 != 0) return {false, 0, "y^2 does not divide the discriminant"};
  }
  int k = small_order(curve, P);
  if (k > 0) return {true, k, ""};
  return {false, 0, "passed integrality and y^2 | disc, but no order <= 16"};
}

std::vector<CurvePoint> torsion_subgroup(const WeierstrassCurve& curve) {
  if (!curve.has_integer_model())
    throw domain_error("clear denominators first: curve coefficients must be integers");
  // candidate y: 0 or y^2 | disc, i.e. y divides the square root of the
  // largest square divisor of disc
  Integer disc = abs(curve.discriminant().numerator());
  Integer ymax = 1;
  for (const auto& [p, e] : factorize(disc)) ymax *= dio::pow(p, e / 2);

  std::set<CurvePoint> found;
  found.insert(CurvePoint::O());
  std::vector<Integer> ys{0};
  for (const Integer& d : divisors(ymax)) {
    ys.push_back(d);
    ys.push_back(-d);
  }
  for (const Integer& y : ys) {
    // x^3 + a x + (b - y^2) = 0
    UniPoly p(std::vector<Rational>{curve.b - Rational(Integer(y * y)), curve.a, Rational(0),
                                    Rational(1)});
    for (const Rational& x : rational_roots(p)) {
      CurvePoint cand = CurvePoint::affine(x, Rational(y));
      if (small_order(curve, cand) > 0) found.insert(cand);
    }
  }
  std::vector<CurvePoint> out(found.begin(), found.end());
  // the enumeration must already be a group; verify closure
  for (const CurvePoint& P : out)
    for (const CurvePoint& Q : out)
      if (!found.count(add(curve, P, Q)))
        throw domain_error("internal error: torsion enumeration not closed");
  return out;
}

namespace {

// Element of Q[x, y] / (y^2 - x^3 - a x - b), written even(x) + y * odd(x).
struct CurveFn {
  UniPoly even, odd;
};

CurveFn mul(const CurveFn& f, const CurveFn& g, const UniPoly& rhs_cubic) {
  // (e1 + y o1)(e2 + y o2) = e1 e2 + y^2 o1 o2 + y (e1 o2 + o1 e2)
  return {f.even * g.even + rhs_cubic * (f.odd * g.odd), f.even * g.odd + f.odd * g.even};
}

}  // namespace

DivisionPolynomial division_polynomial(const WeierstrassCurve& curve, int n) {
  if (n < 1 || n > 8) throw domain_error("division polynomial index must be in [1, 8]");
  const Rational& a = curve.a;
  const Rational& b = curve.b;
  const UniPoly x = UniPoly::variable();
  const UniPoly rhs = UniPoly(std::vector<Rational>{b, a, Rational(0), Rational(1)});

  // psi_m as elements of Q[x, y]/(y^2 - rhs); psi_m is y*(poly) for even m.
  const int top = n + 1;
  std::vector<CurveFn> psi(top + 1);
  psi[0] = {UniPoly(0), UniPoly(0)};
  psi[1] = {UniPoly(1), UniPoly(0)};
  if (top >= 2) psi[2] = {UniPoly(0), UniPoly(2)};  // 2y
  if (top >= 3)
    psi[3] = {UniPoly(std::vector<Rational>{-(a * a), Rational(12) * b, Rational(6) * a,
                                            Rational(0), Rational(3)}),
              UniPoly(0)};
  if (top >= 4) {
    UniPoly q(std::vector<Rational>{-Rational(8) * b * b - a.pow(3), -Rational(4) * a * b,
                                    -Rational(5) * a * a, Rational(20) * b, Rational(5) * a,
                                    Rational(0), Rational(1)});
    psi[4] = {UniPoly(0), Rational(4) * q};  // 4y * q
  }
  for (int m = 5; m <= top; ++m) {
    int h = m / 2;
    if (m % 2 == 1) {
      // psi_{2h+1} = psi_{h+2} psi_h^3 - psi_{h-1} psi_{h+1}^3
      CurveFn h3 = mul(mul(psi[h], psi[h], rhs), psi[h], rhs);
      CurveFn hp13 = mul(mul(psi[h + 1], psi[h + 1], rhs), psi[h + 1], rhs);
      CurveFn lhs = mul(psi[h + 2], h3, rhs);
      CurveFn rhs2 = mul(psi[h - 1], hp13, rhs);
      psi[m] = {lhs.even - rhs2.even, lhs.odd - rhs2.odd};
    } else {
      // psi_{2h} = psi_h (psi_{h+2} psi_{h-1}^2 - psi_{h-2} psi_{h+1}^2) / 2y.
      // The numerator reduces to a pure-x polynomial divisible by
      // y^2 = rhs(x), so dividing by y leaves y * (numerator/rhs).
      CurveFn t1 = mul(psi[h + 2], mul(psi[h - 1], psi[h - 1], rhs), rhs);
      CurveFn t2 = mul(psi[h - 2], mul(psi[h + 1], psi[h + 1], rhs), rhs);
      CurveFn diff{t1.even - t2.even, t1.odd - t2.odd};
      CurveFn prod = mul(psi[h], diff, rhs);
      if (!prod.odd.is_zero())
        throw domain_error("internal error in division polynomial recurrence");
      UniPoly q = exact_div(prod.even, rhs);
      psi[m] = {UniPoly(0), q * Rational(Integer(1), Integer(2))};
    }
  }

  auto square_x = [&](const CurveFn& f) {
    CurveFn s = mul(f, f, rhs);
    if (!s.odd.is_zero()) throw domain_error("internal error: psi^2 not a polynomial in x");
    return s.even;
  };
  UniPoly psi_n_sq = square_x(psi[n]);
  CurveFn prod = mul(psi[n + 1], psi[n - 1], rhs);
  if (!prod.odd.is_zero()) throw domain_error("internal error: phi not a polynomial in x");
  UniPoly phi = x * psi_n_sq - prod.even;
  return {phi, psi_n_sq};
}

std::vector<CurvePoint> division_preimages(const WeierstrassCurve& curve, const CurvePoint& P,
                                           int n) {
  if (n < 1 || n > 8) throw domain_error("division order must be in [1, 8]");
  if (!on_curve(curve, P)) throw domain_error("point is not on the curve");
  if (n == 1) return {P};

  DivisionPolynomial dp = division_polynomial(curve, n);
  UniPoly xeq = P.identity ? dp.psi_sq : dp.phi - UniPoly(P.x) * dp.psi_sq;

  std::set<CurvePoint> out;
  if (P.identity) out.insert(CurvePoint::O());
  for (const Rational& x : rational_roots(xeq)) {
    Rational w = curve.rhs(x);
    std::vector<Rational> lifts;
    if (w.is_zero()) {
      lifts.push_back(Rational(0));
    } else if (w.sign() > 0 && is_perfect_square(w.numerator()) &&
               is_perfect_square(w.denominator())) {
      Rational y(sqrt_exact(w.numerator()), sqrt_exact(w.denominator()));
      lifts.push_back(y);
      lifts.push_back(-y);
    }
    for (const Rational& y : lifts) {
      CurvePoint Q = CurvePoint::affine(x, y);
      if (multiply(curve, n, Q) == P) out.insert(Q);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace dio
