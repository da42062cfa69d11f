#ifndef DIO_PADIC_HPP
#define DIO_PADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "dio/rational.hpp"

namespace dio {

/// p-adic number in the absolute-precision model: the value is known modulo
/// p^prec. Stored as rep / p^shift with an integer representative, so
/// elements of Z_p have shift 0 and an integer rep in [0, p^prec); negative
/// valuations (which iterated integrals can produce) keep a p-power
/// denominator explicit.
class PadicNumber {
 public:
  PadicNumber(long p, long prec) : p_(p), prec_(prec) { check(); }

  static PadicNumber from_integer(long p, long prec, const Integer& v);
  /// Embeds an exact rational whose denominator may carry powers of p.
  static PadicNumber from_rational(long p, long prec, const Rational& q);

  long prime() const { return p_; }
  long precision() const { return prec_; }
  long shift() const { return shift_; }
  const Integer& rep() const { return rep_; }

  /// Exact valuation when the representative is nonzero; otherwise prec()
  /// (the value is indistinguishable from 0, so v >= prec()).
  long valuation() const;
  bool is_zero_to_precision() const { return rep_ == 0; }

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);

  /// Multiplication by an exact rational scalar; absolute precision shifts
  /// by the scalar's valuation.
  PadicNumber mul_rational(const Rational& q) const;

  /// Division by a unit (valuation 0) p-adic number.
  PadicNumber div_unit(const PadicNumber& u) const;

  /// Lower the absolute precision to new_prec (<= precision()).
  PadicNumber truncate(long new_prec) const;

  /// Values agree modulo p^min(precision): the two are indistinguishable.
  friend bool agree(const PadicNumber& a, const PadicNumber& b);

  /// "rep + O(p^N)" or "rep/p^s + O(p^N)".
  std::string to_string() const;
  /// representative as a rational string ("a" or "a/b" with b = p^shift)
  std::string rep_string() const;

 private:
  void check() const;
  void normalize();
  static void require_same(const PadicNumber& a, const PadicNumber& b);

  long p_;
  long prec_;
  long shift_ = 0;
  Integer rep_ = 0;
};

/// p-adic logarithm via the alternating series in (u - 1); requires
/// u = 1 mod p for odd p and u = 1 mod 4 for p = 2. The truncation index is
/// chosen so every discarded term has valuation >= precision.
PadicNumber padic_log(const PadicNumber& u);

/// Word in the two dlog forms on P^1 minus {0, 1, infinity}:
///   w0 = dt/t,  w1 = dt/(1-t).
/// The rightmost letter is integrated first (innermost); [w0, w1] is Li_2.
struct DlogWord {
  enum Letter { w0, w1 };
  std::vector<Letter> letters;

  explicit DlogWord(std::vector<Letter> ls) : letters(std::move(ls)) {
    if (letters.empty()) throw domain_error("empty dlog word");
  }
  /// "01" with leftmost = outermost.
  static DlogWord parse(const std::string& s);
  size_t length() const { return letters.size(); }
};

/// Exact power-series coefficients a_1..a_M of the iterated integral from 0
/// (all integration constants 0): repeatedly multiply by 1/(1-t) and
/// integrate (w1) or divide by t and integrate (w0). Throws "divergent at
/// basepoint" when w0 hits a nonzero constant term.
std::vector<Rational> iterated_integral_series(const DlogWord& word, size_t max_degree);

/// Iterated integral evaluated at z with v(z) >= 1. The rational overload
/// evaluates to absolute precision prec exactly; the p-adic overload carries
/// the precision honestly derivable from z's own precision.
PadicNumber iterated_integral(const DlogWord& word, const Rational& z, long p, long prec);
PadicNumber iterated_integral(const DlogWord& word, const PadicNumber& z, long prec);

/// Checks I(A) * I(B) = sum over shuffles S of I(S) at z, to the precision
/// both sides support.
bool shuffle_check(const DlogWord& a, const DlogWord& b, const Rational& z, long p, long prec);

std::vector<DlogWord> shuffles(const DlogWord& a, const DlogWord& b);

/// Power series sum a_k x^k with an explicit valuation lower bound for all
/// coefficients beyond the stored ones (nullopt = polynomial: no tail).
struct PadicSeries {
  long p;
  std::vector<PadicNumber> coeffs;
  std::optional<long> tail_valuation;

  static PadicSeries from_rationals(long p, long prec, const std::vector<Rational>& cs);
};

/// Strassmann bound: the largest index attaining the minimal coefficient
/// valuation; at most this many zeros in Z_p. Requires an admissible series
/// (tail bound exceeding the minimum, not identically zero to precision).
long strassmann_bound(const PadicSeries& series);

struct ZeroClass {
  Integer residue;        // in [0, p^modulus_exponent)
  long modulus_exponent;  // = depth for resolved classes, may be smaller
                          // for unresolved ones
  bool resolved;          // false: non-unit derivative stalled the refinement
};

/// Residue classes containing every zero of the series in Z_p. The series
/// is first divided by p^(minimal valuation); simple residues (unit
/// derivative) are refined to depth by Hensel/Newton, multiple residues are
/// followed while the refinement stays a single chain and otherwise reported
/// once as an unresolved class at the stall level. Never returns more
/// classes than the Strassmann bound, and never drops a candidate silently.
std::vector<ZeroClass> locate_zeros(const PadicSeries& series, long depth);

}  // namespace dio

#endif
