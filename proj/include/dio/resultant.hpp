#ifndef DIO_RESULTANT_HPP
#define DIO_RESULTANT_HPP

#include <vector>

#include "dio/poly.hpp"

namespace dio {

/// Fraction-free Bareiss determinant. Works over any integral domain with
/// exact division (Rational, UniPoly); every interior division is exact.
template <class K>
K bareiss_determinant(std::vector<std::vector<K>> m) {
  const size_t n = m.size();
  if (n == 0) return K(1);
  int sign = 1;
  K prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == K(0)) {
      size_t r = k + 1;
      while (r < n && m[r][k] == K(0)) ++r;
      if (r == n) return K(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = K(0);
    }
    prev = m[k][k];
  }
  K det = m[n - 1][n - 1];
  return sign < 0 ? K(0) - det : det;
}

template <class K>
std::vector<std::vector<K>> sylvester_matrix(const Poly<K>& p, const Poly<K>& q) {
  const long m = p.degree(), n = q.degree();
  const size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<K>> s(dim, std::vector<K>(dim, K(0)));
  for (long row = 0; row < n; ++row)
    for (long i = 0; i <= m; ++i) s[row][row + i] = p.coeff(m - i);
  for (long row = 0; row < m; ++row)
    for (long i = 0; i <= n; ++i) s[n + row][row + i] = q.coeff(n - i);
  return s;
}

/// res(p, q) as the Sylvester determinant. Zero iff p and q share a root
/// over the algebraic closure of the coefficient field.
template <class K>
K resultant(const Poly<K>& p, const Poly<K>& q) {
  if (p.is_zero() && q.is_zero()) throw domain_error("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return K(0);
  if (p.degree() == 0 && q.degree() == 0) return K(1);
  if (p.degree() == 0) return Poly<K>(p.coeff(0)).pow(q.degree()).coeff(0);
  if (q.degree() == 0) return Poly<K>(q.coeff(0)).pow(p.degree()).coeff(0);
  return bareiss_determinant(sylvester_matrix(p, q));
}

/// Classical discriminant of a monic polynomial:
///   disc(p) = (-1)^(n(n-1)/2) * res(p, p')        (n = deg p).
/// This normalization agrees with b^2 - 4c on monic quadratics x^2 + bx + c,
/// so disc(x^2 - t) = 4t.
template <class K>
K discriminant(const Poly<K>& p) {
  if (!p.is_monic()) throw domain_error("discriminant requires a monic polynomial");
  const long n = p.degree();
  if (n < 1) throw domain_error("discriminant requires degree >= 1");
  if (n == 1) return K(1);
  K r = resultant(p, p.derivative());
  return (n * (n - 1) / 2) % 2 == 1 ? K(0) - r : r;
}

}  // namespace dio

#endif
