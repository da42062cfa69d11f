#ifndef DIO_CUBIC_HPP
#define DIO_CUBIC_HPP

#include "dio/conic.hpp"
#include "dio/weierstrass.hpp"

namespace dio {

/// The diagonal cubic x^3 + y^3 = c, smooth for c != 0.
struct DiagonalCubic {
  Rational c;

  explicit DiagonalCubic(Rational c_) : c(std::move(c_)) {
    if (c.is_zero()) throw domain_error("x^3 + y^3 = 0 is singular");
  }
  bool contains(const RatPoint& p) const {
    return (p.x.pow(3) + p.y.pow(3) - c).is_zero();
  }
};

/// Line A*(x - x0) + B*(y - y0) = 0 through a base point, with (A, B)
/// normalized to a primitive integer vector (positive A, or positive B when
/// A = 0).
struct TangentLine {
  RatPoint at;
  Integer A, B;
};

/// Gradient line of the cubic at P, primitive-normalized; for (9,10) on
/// x^3+y^3=1729 this is 81(x-9) + 100(y-10) = 0.
TangentLine tangent_line(const DiagonalCubic& curve, const RatPoint& P);

/// Third intersection of the tangent at P with the curve (Vieta with x_P as
/// a double root). Vertical tangents are handled by swapping coordinates.
/// Throws "third point at infinity" when the substituted cubic degenerates.
RatPoint tangent_step(const DiagonalCubic& curve, const RatPoint& P);

/// Third intersection of the secant through P != Q.
RatPoint secant_step(const DiagonalCubic& curve, const RatPoint& P, const RatPoint& Q);

/// Change of variables onto v^2 = u^3 - 432 c^2:
///   u = 12c/(x+y),  v = 36c(x-y)/(x+y);
/// inverse (x, y) = ((36c+v)/6u, (36c-v)/6u). Requires x + y != 0.
std::pair<WeierstrassCurve, CurvePoint> to_weierstrass(const DiagonalCubic& curve,
                                                       const RatPoint& P);

/// Inverse of to_weierstrass; the point must be affine with u != 0.
RatPoint from_weierstrass(const DiagonalCubic& curve, const CurvePoint& P);

}  // namespace dio

#endif
