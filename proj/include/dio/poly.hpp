#ifndef DIO_POLY_HPP
#define DIO_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dio/rational.hpp"

namespace dio {

/// Dense univariate polynomial over a coefficient ring K. Trailing zero
/// coefficients are trimmed, so degree() is coefficients.size() - 1 and the
/// leading coefficient of a nonzero polynomial is nonzero.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(long c) { assign_constant(K(c)); }  // NOLINT
  Poly(K c) { assign_constant(std::move(c)); }  // NOLINT
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(K coeff, size_t ex) {
    std::vector<K> v(ex + 1, K(0));
    v[ex] = std::move(coeff);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(K(1), 1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const K& lead() const {
    static const K zero(0);
    return c_.empty() ? zero : c_.back();
  }
  K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const std::vector<K>& coeffs() const { return c_; }

  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& k : r.c_) k = -k;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const K& s, const Poly& p) { return Poly(s) * p; }
  friend Poly operator*(const Poly& p, const K& s) { return Poly(s) * p; }

  Poly pow(unsigned long e) const {
    Poly r(1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> v(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(v));
  }

  K eval(const K& x) const {
    K acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Euclidean division; requires K to be a field (the divisor's leading
  /// coefficient must be invertible).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    const K inv_lead = K(1) / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      size_t shift = rem.degree() - b.degree();
      K f = rem.lead() * inv_lead;
      Poly t = monomial(f, shift);
      quot = quot + t;
      rem = rem - t * b;
    }
    return {quot, rem};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Monic gcd over a field.
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    const K inv = K(1) / a.lead();
    Poly m;
    m.c_ = a.c_;
    for (auto& k : m.c_) k = k * inv;
    return m;
  }

 private:
  void assign_constant(K c) {
    if (!(c == K(0))) c_.push_back(std::move(c));
  }
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

using UniPoly = Poly<Rational>;

/// Polynomial in a main variable whose coefficients live in Q[t]; just deep
/// enough for discriminants over localized polynomial rings.
using BiPoly = Poly<UniPoly>;

/// Exact quotient a / b in the coefficient ring; throws if not divisible.
inline Rational exact_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw domain_error("exact division by zero");
  return a / b;
}

inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw domain_error("inexact polynomial division");
  return q;
}

/// Renders sum of c_i * var^i with ascending-degree terms printed from the
/// top down; parses back through the equation grammar.
std::string poly_to_string(const UniPoly& p, const std::string& var);

/// Same for Q[t]-coefficient polynomials (coefficients parenthesized as
/// needed), main variable first.
std::string poly_to_string(const BiPoly& p, const std::string& var, const std::string& tvar);

}  // namespace dio

#endif
