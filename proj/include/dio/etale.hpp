#ifndef DIO_ETALE_HPP
#define DIO_ETALE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dio/poly.hpp"

namespace dio {

/// Symbolic base ring: Z[1/N], F_p, Q, or Q[t, 1/g]. These four shapes have
/// decidable unit tests and cover every localized base appearing in the
/// covering examples.
struct RingDescriptor {
  enum class Kind { IntegersLocalized, PrimeField, Rationals, PolyLocalized };

  Kind kind;
  Integer n = 1;        // N for Z[1/N], p for F_p
  UniPoly g = UniPoly(1);  // g for Q[t, 1/g]

  static RingDescriptor integers_localized(Integer N);
  static RingDescriptor prime_field(Integer p);
  static RingDescriptor rationals();
  static RingDescriptor poly_localized(UniPoly g);

  std::string to_string() const;
};

/// Ring syntax: "Z", "Z[1/N]", "Q", "F_p", "Q[t]", "Q[t,1/g]" with g a
/// polynomial in t.
RingDescriptor parse_ring(const std::string& text);

/// Element of one of the base rings: a rational (arithmetic rings) or a
/// polynomial in t (for Q[t, 1/g]).
using RingElement = std::variant<Rational, UniPoly>;

std::string ring_element_to_string(const RingElement& e);

/// Decides invertibility in the ring. Zero is never a unit (returns false,
/// not an error). For Z[1/N] the element must be N-integral; for Q[t,1/g]
/// it is a unit iff it is a nonzero scalar times a product of irreducible
/// factors of g.
bool is_unit(const RingDescriptor& ring, const RingElement& element);

/// Spec(B) -> Spec(A) candidate with B = A[x]/(f), f monic. For polynomial
/// bases the coefficients of f live in Q[t].
struct EtaleCandidate {
  RingDescriptor base;
  BiPoly f;  // constant-in-t coefficients for arithmetic bases
};

struct EtaleResult {
  bool etale;
  RingElement disc;
  // when not etale: a non-inverted prime (or nonconstant factor) dividing disc
  std::optional<RingElement> witness;
};

/// Unit-discriminant criterion: the map is etale iff disc(f) is a unit in
/// the base ring.
EtaleResult is_etale(const EtaleCandidate& candidate);

/// Number of geometric points of the fiber over p: the degree of the
/// squarefree part of f mod p. Equals deg f exactly when p is unramified.
long geometric_fiber_count(const UniPoly& f, const Integer& p);

struct CoverCandidateReport {
  UniPoly f;
  Integer inverted;  // N
  bool etale = false;
  Integer disc;
  std::vector<Integer> inverted_primes;
  std::vector<Integer> ramified_primes;
};

struct CoverReport {
  bool covers = false;
  std::vector<CoverCandidateReport> candidates;
  std::optional<Integer> uncovered_prime;  // divides every N
};

/// True iff every (f_i, Z[1/N_i]) is etale and gcd(N_1..N_k) = 1, so every
/// prime of Spec(Z) lies in some image.
CoverReport covers_spec_z(const std::vector<std::pair<UniPoly, Integer>>& candidates);

class MultiPoly;  // defined in multipoly.hpp

/// Conversions from parsed polynomial text. The main variable is the unique
/// non-"t" variable ("x" by convention); "t" is the parameter of polynomial
/// base rings.
UniPoly to_unipoly(const MultiPoly& m, const std::string& var);
BiPoly to_bipoly(const MultiPoly& m, const std::string& main_var, const std::string& param_var);
EtaleCandidate candidate_from_text(const std::string& ring_text, const std::string& poly_text);

}  // namespace dio

#endif
