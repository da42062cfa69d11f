#include "dio/equation.hpp"

namespace dio {

bool is_point(const Equation& eq, const std::map<std::string, Rational>& assignment) {
  for (const auto& v : eq.variables)
    if (assignment.find(v) == assignment.end())
      throw domain_error("missing binding for variable '" + v + "'");
  return eq.lhs.eval(assignment).is_zero();
}

std::vector<std::vector<Integer>> search_integer_points(const Equation& eq,
                                                        const Integer& bound) {
  if (bound < 0) throw domain_error("bound must be >= 0");
  const size_t n = eq.variables.size();
  if (n > 4) throw domain_error("too many variables for exhaustive search (limit is 4)");
  std::vector<std::vector<Integer>> out;
  if (n == 0) {
    if (eq.lhs.is_zero()) out.push_back({});
    return out;
  }
  std::vector<Integer> coords(n, -bound);
  std::map<std::string, Rational> assignment;
  while (true) {
    for (size_t i = 0; i < n; ++i) assignment[eq.variables[i]] = Rational(coords[i]);
    if (eq.lhs.eval(assignment).is_zero()) out.push_back(coords);
    size_t i = n;
    while (i-- > 0) {
      if (coords[i] < bound) {
        ++coords[i];
        for (size_t j = i + 1; j < n; ++j) coords[j] = -bound;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace dio
