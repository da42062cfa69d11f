#ifndef DIO_ROOTS_HPP
#define DIO_ROOTS_HPP

#include <vector>

#include "dio/poly.hpp"

namespace dio {

/// All rational roots of p, sorted ascending, each certified by exact
/// evaluation. The search scales p to primitive integer coefficients and
/// runs the rational-root theorem: candidates are +-(divisors of the
/// constant term)/(divisors of the leading coefficient).
/// Throws on the zero polynomial ("indeterminate roots").
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace dio

#endif
