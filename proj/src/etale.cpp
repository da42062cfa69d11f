#include "dio/etale.hpp"

#include <algorithm>

#include "dio/equation.hpp"
#include "dio/fp.hpp"
#include "dio/resultant.hpp"
#include "dio/roots.hpp"

namespace dio {

RingDescriptor RingDescriptor::integers_localized(Integer N) {
  if (N < 1) throw domain_error("Z[1/N] needs N >= 1");
  return {Kind::IntegersLocalized, std::move(N), UniPoly(1)};
}

RingDescriptor RingDescriptor::prime_field(Integer p) {
  if (!is_prime(p)) throw domain_error("F_p needs a prime p");
  return {Kind::PrimeField, std::move(p), UniPoly(1)};
}

RingDescriptor RingDescriptor::rationals() { return {Kind::Rationals, 1, UniPoly(1)}; }

RingDescriptor RingDescriptor::poly_localized(UniPoly g) {
  if (g.is_zero()) throw domain_error("Q[t,1/g] needs nonzero g");
  return {Kind::PolyLocalized, 1, std::move(g)};
}

std::string RingDescriptor::to_string() const {
  switch (kind) {
    case Kind::IntegersLocalized:
      return n == 1 ? "Z" : "Z[1/" + n.get_str() + "]";
    case Kind::PrimeField:
      return "F_" + n.get_str();
    case Kind::Rationals:
      return "Q";
    case Kind::PolyLocalized:
      if (g.is_constant()) return "Q[t]";
      return "Q[t,1/" + poly_to_string(g, "t") + "]";
  }
  return "?";
}

RingDescriptor parse_ring(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "Q") return RingDescriptor::rationals();
  if (s == "Z") return RingDescriptor::integers_localized(1);
  if (s == "Q[t]") return RingDescriptor::poly_localized(UniPoly(1));
  if (s.rfind("F_", 0) == 0) {
    std::string num = s.substr(2);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("malformed prime field: '" + text + "'");
    return RingDescriptor::prime_field(Integer(num));
  }
  if (s.rfind("Z[1/", 0) == 0 && s.back() == ']') {
    std::string num = s.substr(4, s.size() - 5);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("malformed localization: '" + text + "'");
    return RingDescriptor::integers_localized(Integer(num));
  }
  if (s.rfind("Q[t,1/", 0) == 0 && s.back() == ']') {
    std::string body = s.substr(6, s.size() - 7);
    MultiPoly g = parse_polynomial(body);
    auto vars = g.variables();
    if (!vars.empty() && (vars.size() > 1 || *vars.begin() != "t"))
      throw domain_error("localizing polynomial must be in t");
    UniPoly gp;
    for (const auto& [m, c] : g.terms()) {
      unsigned e = m.empty() ? 0 : m.begin()->second;
      gp = gp + UniPoly::monomial(c, e);
    }
    return RingDescriptor::poly_localized(gp);
  }
  throw domain_error("unrecognized ring syntax: '" + text +
                     "' (expected Q, Z, Z[1/N], F_p, Q[t], Q[t,1/g])");
}

std::string ring_element_to_string(const RingElement& e) {
  if (std::holds_alternative<Rational>(e)) return std::get<Rational>(e).to_string();
  return poly_to_string(std::get<UniPoly>(e), "t");
}

namespace {

// true iff every prime factor of m divides N (m != 0), computed by
// repeatedly stripping gcd(m, N) -- no factorization needed.
bool supported_on(Integer m, const Integer& N) {
  m = abs(m);
  while (m > 1) {
    Integer g = gcd(m, N);
    if (g == 1) return false;
    while (m % g == 0) m /= g;
  }
  return true;
}

// leftover part of m after removing all prime factors shared with N
Integer strip_supported(Integer m, const Integer& N) {
  m = abs(m);
  while (m > 1) {
    Integer g = gcd(m, N);
    if (g == 1) break;
    while (m % g == 0) m /= g;
  }
  return m;
}

// polynomial analogue: strip factors shared with g until coprime
UniPoly strip_factors_of(UniPoly h, const UniPoly& g) {
  while (h.degree() > 0) {
    UniPoly d = gcd(h, g);
    if (d.degree() <= 0) break;
    h = exact_div(h, d);
  }
  return h;
}

}  // namespace

bool is_unit(const RingDescriptor& ring, const RingElement& element) {
  switch (ring.kind) {
    case RingDescriptor::Kind::IntegersLocalized: {
      if (!std::holds_alternative<Rational>(element))
        throw domain_error("element of Z[1/N] must be rational");
      const Rational& r = std::get<Rational>(element);
      if (r.is_zero()) return false;
      if (!supported_on(r.denominator(), ring.n))
        throw domain_error("element does not lie in Z[1/" + ring.n.get_str() + "]");
      return supported_on(r.numerator(), ring.n);
    }
    case RingDescriptor::Kind::PrimeField: {
      if (!std::holds_alternative<Rational>(element))
        throw domain_error("element of F_p must be rational");
      const Rational& r = std::get<Rational>(element);
      if (r.is_zero()) return false;
      if (mpz_divisible_p(r.denominator().get_mpz_t(), ring.n.get_mpz_t()))
        throw domain_error("element not defined in F_p (denominator divisible by p)");
      return !mpz_divisible_p(r.numerator().get_mpz_t(), ring.n.get_mpz_t());
    }
    case RingDescriptor::Kind::Rationals:
      return !std::get<Rational>(element).is_zero();
    case RingDescriptor::Kind::PolyLocalized: {
      if (std::holds_alternative<Rational>(element))
        return !std::get<Rational>(element).is_zero();
      const UniPoly& h = std::get<UniPoly>(element);
      if (h.is_zero()) return false;
      if (h.degree() == 0) return true;
      return strip_factors_of(h, ring.g).degree() == 0;
    }
  }
  return false;
}

EtaleResult is_etale(const EtaleCandidate& candidate) {
  if (!candidate.f.is_monic() || candidate.f.degree() < 1)
    throw domain_error("etale criterion requires a monic polynomial of degree >= 1");

  const bool poly_base = candidate.base.kind == RingDescriptor::Kind::PolyLocalized;
  RingElement disc;
  if (poly_base) {
    disc = discriminant(candidate.f);
  } else {
    // coefficients must be constant in t and lie in the base ring
    std::vector<Rational> cs;
    for (const UniPoly& c : candidate.f.coeffs()) {
      if (!c.is_constant())
        throw domain_error("polynomial coefficients not valid in " + candidate.base.to_string());
      cs.push_back(c.coeff(0));
    }
    for (const Rational& c : cs) {
      bool ok = true;
      switch (candidate.base.kind) {
        case RingDescriptor::Kind::IntegersLocalized:
          ok = supported_on(c.denominator(), candidate.base.n);
          break;
        case RingDescriptor::Kind::PrimeField:
          ok = !mpz_divisible_p(c.denominator().get_mpz_t(), candidate.base.n.get_mpz_t());
          break;
        default:
          break;
      }
      if (!ok)
        throw domain_error("polynomial coefficients not valid in " + candidate.base.to_string());
    }
    disc = discriminant(UniPoly(std::move(cs)));
  }

  EtaleResult res{is_unit(candidate.base, disc), disc, std::nullopt};
  if (res.etale) return res;

  // witness: a non-inverted prime (or nonconstant factor) dividing disc
  switch (candidate.base.kind) {
    case RingDescriptor::Kind::IntegersLocalized: {
      const Rational& d = std::get<Rational>(disc);
      if (d.is_zero()) break;
      Integer rest = strip_supported(d.numerator(), candidate.base.n);
      if (rest > 1) res.witness = RingElement(Rational(factorize(rest).begin()->first));
      break;
    }
    case RingDescriptor::Kind::PolyLocalized: {
      const UniPoly& d = std::get<UniPoly>(disc);
      if (d.is_zero()) break;
      UniPoly rest = strip_factors_of(d, candidate.base.g);
      if (rest.degree() > 0) {
        // prefer a linear factor when one exists
        auto roots = rational_roots(rest);
        if (!roots.empty())
          res.witness = RingElement(UniPoly(std::vector<Rational>{-roots[0], Rational(1)}));
        else
          res.witness = RingElement(exact_div(rest, UniPoly(rest.lead())));
      }
      break;
    }
    default:
      break;  // over a field non-unit means disc = 0; no prime witness
  }
  return res;
}

long geometric_fiber_count(const UniPoly& f, const Integer& p) {
  if (!is_prime(p)) throw domain_error("fiber count needs a prime");
  if (!f.is_monic()) throw domain_error("fiber count needs a monic polynomial");
  if (p > Integer(1) << 31) throw domain_error("prime too large for desk-scale fiber count");
  FpPoly fbar = fp_reduce(f, p.get_ui());
  return fp_radical(fbar).degree();
}

UniPoly to_unipoly(const MultiPoly& m, const std::string& var) {
  UniPoly out;
  for (const auto& [mono, c] : m.terms()) {
    unsigned e = 0;
    for (const auto& [v, k] : mono) {
      if (v != var) throw domain_error("polynomial must be univariate in " + var);
      e = k;
    }
    out = out + UniPoly::monomial(c, e);
  }
  return out;
}

BiPoly to_bipoly(const MultiPoly& m, const std::string& main_var, const std::string& param_var) {
  BiPoly out;
  for (const auto& [mono, c] : m.terms()) {
    unsigned em = 0, ep = 0;
    for (const auto& [v, k] : mono) {
      if (v == main_var)
        em = k;
      else if (v == param_var)
        ep = k;
      else
        throw domain_error("unexpected variable '" + v + "' in polynomial");
    }
    out = out + BiPoly::monomial(UniPoly::monomial(c, ep), em);
  }
  return out;
}

EtaleCandidate candidate_from_text(const std::string& ring_text, const std::string& poly_text) {
  RingDescriptor ring = parse_ring(ring_text);
  MultiPoly raw = parse_polynomial(poly_text);
  auto vars = raw.variables();
  std::string main_var;
  for (const auto& v : vars)
    if (v != "t") {
      if (!main_var.empty())
        throw domain_error("polynomial must involve one main variable (plus optionally t)");
      main_var = v;
    }
  if (main_var.empty()) main_var = "x";
  if (vars.count("t") && ring.kind != RingDescriptor::Kind::PolyLocalized)
    throw domain_error("parameter t only makes sense over Q[t,...] bases");
  return {ring, to_bipoly(raw, main_var, "t")};
}

CoverReport covers_spec_z(const std::vector<std::pair<UniPoly, Integer>>& candidates) {
  if (candidates.empty()) throw domain_error("empty candidate list");
  CoverReport report;
  report.covers = true;
  Integer common = 0;
  for (const auto& [f, N] : candidates) {
    CoverCandidateReport c;
    c.f = f;
    c.inverted = N;
    EtaleCandidate cand{RingDescriptor::integers_localized(N), BiPoly()};
    for (size_t i = 0; i < f.coeffs().size(); ++i)
      cand.f = cand.f + BiPoly::monomial(UniPoly(f.coeff(i)), i);
    EtaleResult er = is_etale(cand);
    c.etale = er.etale;
    c.disc = std::get<Rational>(er.disc).numerator();
    if (N > 1)
      for (const auto& [p, e] : factorize(N)) c.inverted_primes.push_back(p);
    if (c.disc != 0 && abs(c.disc) != 1)
      for (const auto& [p, e] : factorize(c.disc)) c.ramified_primes.push_back(p);
    if (!c.etale) report.covers = false;
    common = gcd(common, N);
    report.candidates.push_back(std::move(c));
  }
  if (common > 1) {
    report.covers = false;
    report.uncovered_prime = factorize(common).begin()->first;
  }
  return report;
}

}  // namespace dio
