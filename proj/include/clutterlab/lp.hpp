#pragma once

// Exact rational linear programming: a dense two-phase simplex with Bland's
// rule and a depth-first branch-and-bound on top of it.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace clutterlab {

using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
bool is_integer(const Rational& r);
Rational parse_rational(const std::string& text);

enum class Sense { less_equal, greater_equal, equal };
enum class Direction { minimize, maximize };

struct LinearProgram {
  Direction direction = Direction::minimize;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  /// Per-variable lower bounds; empty means every variable is >= 0.
  std::vector<Rational> lower_bounds;

  LinearProgram() = default;
  LinearProgram(Direction dir, std::vector<Rational> obj) : direction(dir), objective(std::move(obj)) {}

  std::size_t num_variables() const { return objective.size(); }
  std::size_t num_constraints() const { return rows.size(); }
  void add_constraint(std::vector<Rational> row, Sense sense, Rational value);
  /// Throws Error on inconsistent dimensions.
  void validate() const;
};

struct LpOptimal {
  Rational value;
  std::vector<Rational> x;
};
struct LpUnbounded {};
struct LpInfeasible {};

using LpResult = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

LpResult solve_lp_exact(const LinearProgram& lp);

/// Integer optimum over all variables by branch-and-bound on the exact LP
/// relaxation, branching on the smallest-index fractional variable (floor
/// side first). `node_limit` guards against runaway searches.
LpResult solve_ilp_exact(const LinearProgram& lp, std::size_t node_limit = 200000);

}  // namespace clutterlab
