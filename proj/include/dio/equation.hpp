#ifndef DIO_EQUATION_HPP
#define DIO_EQUATION_HPP

#include <string>
#include <vector>

#include "dio/multipoly.hpp"

namespace dio {

/// Syntax error with the 0-based byte offset of the offending token.
/// The CLI maps this to exit code 2.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// A polynomial equation normalized to lhs = 0. Parsing "x^2+y^2=1" and
/// "x^2+y^2-1=0" yields identical lhs.
struct Equation {
  MultiPoly lhs;
  std::vector<std::string> variables;  // sorted ascending

  long degree() const { return lhs.total_degree(); }
  friend bool operator==(const Equation& a, const Equation& b) { return a.lhs == b.lhs; }
};

/// Grammar (precedence ^ > unary - > * > binary +/-):
///   equation := expr ('=' expr)? end
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := '-' factor | power
///   power    := atom ('^' natural)?
///   atom     := number | identifier | '(' expr ')'
///   number   := digits ('/' digits)?          -- a fraction literal
/// Juxtaposition is not multiplication: "2x" is a syntax error.
Equation parse_equation(const std::string& text);

/// Same grammar without the '=' production.
MultiPoly parse_polynomial(const std::string& text);

/// true iff lhs evaluates to exactly 0 at the assignment; the assignment
/// must bind every variable of the equation.
bool is_point(const Equation& eq, const std::map<std::string, Rational>& assignment);

/// All integer solutions with every coordinate in [-bound, bound],
/// lexicographically ordered in the equation's variable order. At most 4
/// variables (desk-scale exhaustive scan).
std::vector<std::vector<Integer>> search_integer_points(const Equation& eq, const Integer& bound);

}  // namespace dio

#endif
