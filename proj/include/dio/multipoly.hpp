#ifndef DIO_MULTIPOLY_HPP
#define DIO_MULTIPOLY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dio/rational.hpp"

namespace dio {

/// Exponent vector: variable name -> positive power. Variables absent from
/// the map have exponent zero.
using Monomial = std::map<std::string, unsigned>;

/// Sparse multivariate polynomial over Rational. No stored term has a zero
/// coefficient, which makes the representation canonical: two parses of the
/// same polynomial compare equal with operator==.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.terms_[Monomial{{name, 1}}] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::set<std::string> variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) vs.insert(v);
    return vs;
  }

  long total_degree() const {
    long d = is_zero() ? -1 : 0;
    for (const auto& [m, c] : terms_) {
      long t = 0;
      for (const auto& [v, e] : m) t += e;
      d = std::max(d, t);
    }
    return d;
  }

  long degree_in(const std::string& var) const {
    long d = 0;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it != m.end()) d = std::max(d, static_cast<long>(it->second));
    }
    return d;
  }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned long e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Exact evaluation; every variable of the polynomial must be bound.
  /// Throws naming the first missing variable.
  Rational eval(const std::map<std::string, Rational>& assignment) const;

  /// Canonical rendering: graded lexicographic term order (total degree
  /// descending, then lexicographic in the alphabetically sorted variables).
  /// The output re-parses to an equal polynomial.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace dio

#endif
