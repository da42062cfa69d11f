#ifndef DIO_CONIC_HPP
#define DIO_CONIC_HPP

#include <array>
#include <optional>

#include "dio/equation.hpp"

namespace dio {

/// Slope of a line: a finite rational or the vertical marker.
struct Slope {
  std::optional<Rational> m;  // nullopt = vertical

  static Slope vertical() { return Slope{std::nullopt}; }
  static Slope finite(Rational v) { return Slope{std::move(v)}; }
  bool is_vertical() const { return !m.has_value(); }
  friend bool operator==(const Slope& a, const Slope& b) { return a.m == b.m; }
};

struct RatPoint {
  Rational x, y;
  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Non-degenerate plane conic a*x^2 + b*x*y + c*y^2 + d*x + e*y + f = 0.
/// Degeneracy is rejected at construction via the determinant of the
/// associated symmetric 3x3 matrix.
class Conic {
 public:
  Conic(Rational a, Rational b, Rational c, Rational d, Rational e, Rational f);

  /// Extracts the six coefficients from a two-variable equation of total
  /// degree exactly 2 (variables taken in sorted order).
  static Conic from_equation(const Equation& eq);

  Rational eval(const RatPoint& p) const;
  bool contains(const RatPoint& p) const { return eval(p).is_zero(); }

  Rational a, b, c, d, e, f;
};

/// Second intersection of the conic with the line through `base` of slope
/// `m`. Tangent lines return `base` itself, so the sweep is total in m.
/// The base point must lie on the conic.
RatPoint sweep(const Conic& conic, const RatPoint& base, const Slope& m);

/// Inverse of the sweep: the slope of the line joining two distinct points
/// of the conic (vertical marker when the x-coordinates agree).
Slope slope_between(const Conic& conic, const RatPoint& base, const RatPoint& other);

/// Primitive Pythagorean-type triple (p, q, r) with p^2 + q^2 = r^2 obtained
/// from slope m = a/b > 0, m != 1: (|b^2-a^2|, 2ab, a^2+b^2) / gcd.
std::array<Integer, 3> pythagorean_triple(const Rational& m);

}  // namespace dio

#endif
