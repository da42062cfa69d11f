#ifndef DIO_RATIONAL_HPP
#define DIO_RATIONAL_HPP

#include <ostream>
#include <string>

#include "dio/numeric.hpp"

namespace dio {

/// Arbitrary-precision reduced fraction. Always canonical: the stored
/// numerator and denominator are coprime and the denominator is >= 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}            // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return v_ < 0 ? Rational(mpq_class(-v_)) : *this; }

  Rational inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Rational(1) / *this;
  }

  Rational pow(unsigned long e) const {
    Rational r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// "num" when integral, "num/den" otherwise.
  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Strict parse of "num" or "num/den" with optional leading '-'.
  static Rational from_string(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // mpq arithmetic keeps the canonical form invariant
};

inline Rational Rational::from_string(const std::string& s) {
  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  auto slash = body.find('/');
  Integer num, den = 1;
  if (slash == std::string::npos) {
    if (!is_digits(body)) throw domain_error("malformed rational: '" + s + "'");
    num = Integer(body);
  } else {
    std::string ns = body.substr(0, slash), ds = body.substr(slash + 1);
    if (!is_digits(ns) || !is_digits(ds)) throw domain_error("malformed rational: '" + s + "'");
    num = Integer(ns);
    den = Integer(ds);
    if (den == 0) throw domain_error("rational with zero denominator");
  }
  Rational r(num, den);
  return neg ? -r : r;
}

}  // namespace dio

#endif
