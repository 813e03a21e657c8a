#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace cgcore {

enum class Direction { Maximize, Minimize };
enum class Sense { LessEqual, GreaterEqual };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

// A linear program over exact rationals.
//
//   optimize  c . x
//   s.t.      a_i . x  (<= | >=)  b_i   for every row i
//             x_j >= lower_bounds[j]    (all zero when the vector is empty)
//
// Rows are sparse; a stored coefficient must be nonzero and every row must
// keep at least one entry.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, Rational>> entries;
    Sense sense = Sense::LessEqual;
    Rational rhs;
  };

  Direction direction = Direction::Maximize;
  std::vector<Rational> objective;
  std::vector<Row> rows;
  std::vector<Rational> lower_bounds;  // empty means all zero

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  Rational lower_bound(int j) const {
    return lower_bounds.empty() ? Rational(0) : lower_bounds[j];
  }
};

// Dual sign convention, fixed throughout:
//   maximize:  y_i >= 0 on <= rows, y_i <= 0 on >= rows,
//              reduced_j = c_j - sum_i y_i a_ij <= 0 for every variable;
//   minimize:  y_i >= 0 on >= rows, y_i <= 0 on <= rows,
//              reduced_j = c_j - sum_i y_i a_ij >= 0.
// In both directions the dual objective is
//   sum_i y_i b_i + sum_j reduced_j * lower_bound_j
// and equals the primal optimum at an optimal basis.
struct LPSolution {
  SolveStatus status = SolveStatus::Optimal;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::vector<int> basis;      // basic column ids; structural columns first,
                               // then one slack per row
  std::vector<Rational> ray;   // improving direction when unbounded
};

// Two-phase primal simplex on the exact tableau, pivoting by Bland's rule
// (lowest eligible index enters, ties on the ratio test broken by the lowest
// basic index).  Termination is guaranteed; the primal/dual pair at the final
// basis satisfies complementary slackness by construction.  The returned
// primal point is a basic feasible solution, i.e. a vertex of the feasible
// region.
LPSolution solve_lp(const LinearProgram& lp);

struct DualityViolation {
  std::string check;   // "primal-feasibility" | "dual-feasibility" |
                       // "objective-mismatch" | "complementary-slackness"
  std::string where;   // "row" | "column" | "value"
  int index = -1;
  std::string detail;
};

struct DualityReport {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool objectives_match = false;
  bool slackness_ok = false;
  std::vector<DualityViolation> violations;

  bool all_ok() const {
    return primal_feasible && dual_feasible && objectives_match && slackness_ok;
  }
};

// Re-derives all four certificate families from scratch, in exact
// arithmetic, without trusting anything beyond the vectors in `sol`.
// Requires sol.status == Optimal.
DualityReport check_certificates(const LinearProgram& lp, const LPSolution& sol);

struct IntegralDualWitness {
  bool found = false;
  std::vector<long long> assignment;  // one nonnegative integer per variable
  Rational objective_value;
};

// Exhaustive branch-and-bound for a nonnegative integer point of `lp` whose
// objective equals `target` exactly.  `lp` must be a covering program:
// minimize with nonnegative objective, nonnegative coefficients, >= rows and
// zero lower bounds; that shape is what makes the search region finite.
// Each variable is capped by ceil(max_i b_i) * (number of rows); branching
// adds floor/ceil bounds on one fractional coordinate at a time, and a node
// is cut once its LP relaxation exceeds the target.
IntegralDualWitness find_integral_dual(const LinearProgram& lp,
                                       const Rational& target);

}  // namespace cgcore
