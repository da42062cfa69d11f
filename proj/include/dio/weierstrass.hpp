#ifndef DIO_WEIERSTRASS_HPP
#define DIO_WEIERSTRASS_HPP

#include <string>
#include <vector>

#include "dio/poly.hpp"

namespace dio {

/// Short Weierstrass curve y^2 = x^3 + a*x + b with nonzero discriminant
/// -16(4a^3 + 27b^2).
struct WeierstrassCurve {
  Rational a, b;

  WeierstrassCurve(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
    if (discriminant().is_zero()) throw domain_error("singular Weierstrass curve");
  }
  Rational discriminant() const {
    return Rational(-16) * (Rational(4) * a.pow(3) + Rational(27) * b.pow(2));
  }
  bool has_integer_model() const { return a.is_integer() && b.is_integer(); }
  Rational rhs(const Rational& x) const { return x.pow(3) + a * x + b; }
};

/// Point of a Weierstrass curve: the identity O or an affine pair.
struct CurvePoint {
  bool identity = true;
  Rational x, y;

  static CurvePoint O() { return CurvePoint{}; }
  static CurvePoint affine(Rational x, Rational y) {
    return CurvePoint{false, std::move(x), std::move(y)};
  }
  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.identity || q.identity) return p.identity == q.identity;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator<(const CurvePoint& p, const CurvePoint& q) {
    if (p.identity != q.identity) return p.identity;
    if (p.identity) return false;
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
  }
};

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& P);

CurvePoint negate(const CurvePoint& P);

/// Chord-and-tangent group law with identity O; total on curve points.
CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& P, const CurvePoint& Q);

/// [n]P by double-and-add; [0]P = O and [-n]P = -[n]P.
CurvePoint multiply(const WeierstrassCurve& curve, const Integer& n, const CurvePoint& P);

/// Nagell-Lutz outcome: rational torsion points on an integer model have
/// integer coordinates and y = 0 or y^2 | disc; points passing those checks
/// are classified by searching for an order k <= 16.
struct NagellLutzVerdict {
  bool torsion = false;
  int order = 0;              // set when torsion
  std::string certificate;    // failed condition when not torsion
};

NagellLutzVerdict nagell_lutz_test(const WeierstrassCurve& curve, const CurvePoint& P);

/// Full rational torsion subgroup of an integer-coefficient curve, sorted
/// (O first). The returned set is verified closed under the group law.
std::vector<CurvePoint> torsion_subgroup(const WeierstrassCurve& curve);

/// Division polynomial data for [n]: x([n](x,y)) = phi_n(x) / psi_n^2(x).
struct DivisionPolynomial {
  UniPoly phi;
  UniPoly psi_sq;
};

/// n in [1, 8] (desk-scale).
DivisionPolynomial division_polynomial(const WeierstrassCurve& curve, int n);

/// Exactly the rational points Q with [n]Q = P: rational roots of
/// phi_n(X) - x_P * psi_n^2(X), lifted to the curve and verified by
/// multiply. n in [1, 8].
std::vector<CurvePoint> division_preimages(const WeierstrassCurve& curve, const CurvePoint& P,
                                           int n);

}  // namespace dio

#endif
