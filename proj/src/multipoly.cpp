#include "dio/multipoly.hpp"

#include <algorithm>

namespace dio {

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly r(Rational(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw domain_error("unbound variable '" + v + "'");
      term *= it->second.pow(e);
    }
    acc += term;
  }
  return acc;
}

namespace {

long mono_degree(const Monomial& m) {
  long d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

// grlex: total degree first, then lexicographic on exponents taken in
// alphabetical variable order (higher power of the earlier variable wins).
bool grlex_before(const Monomial& a, const Monomial& b, const std::vector<std::string>& vars) {
  long da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  for (const auto& v : vars) {
    auto ia = a.find(v), ib = b.find(v);
    unsigned ea = ia == a.end() ? 0 : ia->second;
    unsigned eb = ib == b.end() ? 0 : ib->second;
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  const std::set<std::string> vs = variables();
  std::vector<std::string> vars(vs.begin(), vs.end());
  std::vector<const std::pair<const Monomial, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](auto* x, auto* y) { return grlex_before(x->first, y->first, vars); });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    std::string mono;
    for (const auto& v : vars) {
      auto it = m.find(v);
      if (it == m.end()) continue;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (it->second > 1) mono += "^" + std::to_string(it->second);
    }
    std::string body;
    if (mono.empty())
      body = a.to_string();
    else if (a == Rational(1))
      body = mono;
    else
      body = a.to_string() + "*" + mono;
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? "-" : "+") + body;
    }
  }
  return out;
}

}  // namespace dio
