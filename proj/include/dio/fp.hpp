#ifndef DIO_FP_HPP
#define DIO_FP_HPP

#include <cstdint>
#include <vector>

#include "dio/poly.hpp"

namespace dio {

/// Polynomial over F_p with small prime modulus; just enough arithmetic for
/// fiber counting (gcd, derivative, radical).
struct FpPoly {
  uint64_t p = 0;
  std::vector<uint64_t> c;  // coefficients in [0, p), trailing zeros trimmed

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

FpPoly fp_reduce(const UniPoly& f, uint64_t p);
FpPoly fp_monic(const FpPoly& f);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);
FpPoly fp_derivative(const FpPoly& f);

/// Product of the distinct irreducible factors of f (handles inseparable
/// p-th-power parts).
FpPoly fp_radical(const FpPoly& f);

uint64_t fp_inv(uint64_t a, uint64_t p);

}  // namespace dio

#endif
