#include "dio/poly.hpp"

namespace dio {

namespace {

void append_term(std::string& out, bool& first, const std::string& body, bool negative) {
  if (first) {
    if (negative) out += "-";
    first = false;
  } else {
    out += negative ? "-" : "+";
  }
  out += body;
}

std::string monomial_str(const std::string& var, size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string poly_to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    Rational c = p.coeff(i);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    std::string mono = monomial_str(var, i);
    std::string body;
    if (mono.empty())
      body = a.to_string();
    else if (a == Rational(1))
      body = mono;
    else
      body = a.to_string() + "*" + mono;
    append_term(out, first, body, neg);
  }
  return out;
}

std::string poly_to_string(const BiPoly& p, const std::string& var, const std::string& tvar) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    UniPoly c = p.coeff(i);
    if (c.is_zero()) continue;
    std::string mono = monomial_str(var, i);
    if (mono.empty()) {
      std::string cs = poly_to_string(c, tvar);
      bool neg = cs[0] == '-';
      append_term(out, first, neg ? cs.substr(1) : cs, neg);
      continue;
    }
    if (c.is_constant()) {
      Rational a = c.coeff(0);
      bool neg = a.sign() < 0;
      Rational ab = a.abs();
      std::string body = ab == Rational(1) ? mono : ab.to_string() + "*" + mono;
      append_term(out, first, body, neg);
    } else if (c.coeffs().size() == 1 || c == UniPoly::monomial(c.lead(), c.degree())) {
      // single-term coefficient like 4t: render 4*t*x^i without parens
      Rational a = c.lead();
      bool neg = a.sign() < 0;
      Rational ab = a.abs();
      std::string body;
      if (ab != Rational(1)) body += ab.to_string() + "*";
      body += monomial_str(tvar, c.degree()) + "*" + mono;
      append_term(out, first, body, neg);
    } else {
      append_term(out, first, "(" + poly_to_string(c, tvar) + ")*" + mono, false);
    }
  }
  return out;
}

}  // namespace dio
