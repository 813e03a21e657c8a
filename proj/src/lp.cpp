#include "lp.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace cgcore {

namespace {

// Internal canonical form: maximize c . x', rows a . x' <= b, x' >= 0.
struct Canonical {
  int n = 0;
  int m = 0;
  std::vector<std::vector<Rational>> a;  // dense m x n
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<bool> flipped;  // row negated relative to the original sense
};

void validate(const LinearProgram& lp) {
  const int n = lp.num_vars();
  if (!lp.lower_bounds.empty() &&
      static_cast<int>(lp.lower_bounds.size()) != n) {
    throw MalformedInputError("lower-bound vector length " +
                              std::to_string(lp.lower_bounds.size()) +
                              " does not match " + std::to_string(n) +
                              " variables");
  }
  for (int i = 0; i < lp.num_rows(); ++i) {
    const auto& row = lp.rows[i];
    std::set<int> seen;
    bool nonzero = false;
    for (const auto& [col, coef] : row.entries) {
      if (col < 0 || col >= n) {
        throw MalformedInputError("row " + std::to_string(i) +
                                  " references variable " +
                                  std::to_string(col) + " out of range");
      }
      if (!seen.insert(col).second) {
        throw MalformedInputError("row " + std::to_string(i) +
                                  " repeats variable " + std::to_string(col));
      }
      if (!coef.is_zero()) nonzero = true;
    }
    if (!nonzero) {
      throw MalformedInputError("row " + std::to_string(i) +
                                " has no nonzero entry");
    }
  }
}

Canonical canonicalize(const LinearProgram& lp) {
  Canonical can;
  can.n = lp.num_vars();
  can.m = lp.num_rows();
  can.c.resize(can.n);
  const bool maximize = lp.direction == Direction::Maximize;
  for (int j = 0; j < can.n; ++j) {
    can.c[j] = maximize ? lp.objective[j] : -lp.objective[j];
  }
  can.a.assign(can.m, std::vector<Rational>(can.n, Rational(0)));
  can.b.resize(can.m);
  can.flipped.assign(can.m, false);
  for (int i = 0; i < can.m; ++i) {
    const auto& row = lp.rows[i];
    Rational shift(0);
    for (const auto& [col, coef] : row.entries) {
      can.a[i][col] = coef;
      shift += coef * lp.lower_bound(col);
    }
    can.b[i] = row.rhs - shift;
    if (row.sense == Sense::GreaterEqual) {
      for (auto& v : can.a[i]) v = -v;
      can.b[i] = -can.b[i];
      can.flipped[i] = true;
    }
  }
  return can;
}

struct TableauResult {
  SolveStatus status = SolveStatus::Optimal;
  Rational value;                 // canonical objective at the final basis
  std::vector<Rational> x;        // structural values, length n
  std::vector<Rational> y;        // slack reduced costs, length m
  std::vector<int> basis;
  std::vector<Rational> ray;      // structural direction when unbounded
};

class Tableau {
 public:
  explicit Tableau(const Canonical& can) : n_(can.n), m_(can.m) {
    art_of_row_.assign(m_, -1);
    int artificials = 0;
    for (int i = 0; i < m_; ++i) {
      if (can.b[i] < Rational(0)) art_of_row_[i] = artificials++;
    }
    cols_ = n_ + m_ + artificials;
    rows_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
    basic_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      auto& row = rows_[i];
      for (int j = 0; j < n_; ++j) row[j] = can.a[i][j];
      row[n_ + i] = Rational(1);
      row[cols_] = can.b[i];
      if (art_of_row_[i] >= 0) {
        for (auto& v : row) v = -v;
        const int art_col = n_ + m_ + art_of_row_[i];
        row[art_col] = Rational(1);
        basic_[i] = art_col;
      } else {
        basic_[i] = n_ + i;
      }
    }
  }

  TableauResult solve(const Canonical& can) {
    TableauResult res;
    if (n_ + m_ + 0 < cols_) {  // artificials present: phase 1
      std::vector<Rational> cost(cols_, Rational(0));
      for (int j = n_ + m_; j < cols_; ++j) cost[j] = Rational(-1);
      load_objective(cost);
      if (run(/*block_artificials=*/false) >= 0) {
        throw Error("internal", "phase 1 cannot be unbounded");
      }
      if (obj_val_ < Rational(0)) {
        res.status = SolveStatus::Infeasible;
        return res;
      }
      evict_artificials();
    }
    std::vector<Rational> cost(cols_, Rational(0));
    for (int j = 0; j < n_; ++j) cost[j] = can.c[j];
    load_objective(cost);
    const int enter = run(/*block_artificials=*/true);
    if (enter >= 0) {
      res.status = SolveStatus::Unbounded;
      res.x = extract_x();
      res.ray = extract_ray(enter);
      res.basis = basic_;
      return res;
    }
    res.status = SolveStatus::Optimal;
    res.value = obj_val_;
    res.x = extract_x();
    res.y.resize(m_);
    for (int i = 0; i < m_; ++i) res.y[i] = obj_row_[n_ + i];
    res.basis = basic_;
    return res;
  }

 private:
  void load_objective(const std::vector<Rational>& cost) {
    cost_ = cost;
    obj_row_.assign(cols_, Rational(0));
    obj_val_ = Rational(0);
    for (int j = 0; j < cols_; ++j) obj_row_[j] = -cost[j];
    for (int i = 0; i < m_; ++i) {
      const Rational cb = cost[basic_[i]];
      if (cb.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) obj_row_[j] += cb * rows_[i][j];
      obj_val_ += cb * rows_[i][cols_];
    }
  }

  // Primal simplex iterations under Bland's rule.  Returns -1 at optimality,
  // or the entering column if that column proves the program unbounded.
  int run(bool block_artificials) {
    const int limit = block_artificials ? n_ + m_ : cols_;
    for (long safety = 0; safety < 2000000; ++safety) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (obj_row_[j] < Rational(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return -1;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][enter] > Rational(0)) {
          Rational ratio = rows_[i][cols_] / rows_[i][enter];
          if (leave < 0 || ratio < best ||
              (ratio == best && basic_[i] < basic_[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
    throw Error("internal", "simplex iteration cap exceeded");
  }

  void pivot(int r, int c) {
    auto& prow = rows_[r];
    const Rational piv = prow[c];
    for (auto& v : prow) v /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Rational f = rows_[i][c];
      if (f.is_zero()) continue;
      auto& row = rows_[i];
      for (int j = 0; j <= cols_; ++j) {
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
      }
    }
    const Rational f = obj_row_[c];
    if (!f.is_zero()) {
      for (int j = 0; j < cols_; ++j) {
        if (!prow[j].is_zero()) obj_row_[j] -= f * prow[j];
      }
      obj_val_ -= f * prow[cols_];
    }
    basic_[r] = c;
  }

  // After a feasible phase 1, pivot leftover artificials out of the basis
  // where the row allows it; rows that are all zero outside the artificial
  // columns are redundant and stay parked at zero.
  void evict_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_ + m_) continue;
      for (int j = 0; j < n_ + m_; ++j) {
        if (!rows_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> extract_x() const {
    std::vector<Rational> x(n_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[basic_[i]] = rows_[i][cols_];
    }
    return x;
  }

  std::vector<Rational> extract_ray(int enter) const {
    std::vector<Rational> d(n_, Rational(0));
    if (enter < n_) d[enter] = Rational(1);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) d[basic_[i]] = -rows_[i][enter];
    }
    return d;
  }

  int n_, m_, cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> obj_row_;
  std::vector<Rational> cost_;
  Rational obj_val_;
  std::vector<int> basic_;
  std::vector<int> art_of_row_;
};

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  validate(lp);
  const Canonical can = canonicalize(lp);
  Tableau tab(can);
  TableauResult raw = tab.solve(can);

  LPSolution sol;
  sol.status = raw.status;
  if (raw.status == SolveStatus::Infeasible) return sol;

  sol.primal.resize(can.n);
  for (int j = 0; j < can.n; ++j) sol.primal[j] = lp.lower_bound(j) + raw.x[j];
  sol.basis = raw.basis;
  if (raw.status == SolveStatus::Unbounded) {
    sol.ray = raw.ray;
    return sol;
  }

  Rational shift(0);
  for (int j = 0; j < can.n; ++j) {
    shift += lp.objective[j] * lp.lower_bound(j);
  }
  const bool maximize = lp.direction == Direction::Maximize;
  sol.value = maximize ? shift + raw.value : shift - raw.value;
  sol.dual.resize(can.m);
  for (int i = 0; i < can.m; ++i) {
    // Canonical multipliers are nonnegative over <=-converted rows; undo the
    // row flips and the objective negation to land in the documented sign
    // convention.
    bool positive = maximize ? !can.flipped[i] : can.flipped[i];
    sol.dual[i] = positive ? raw.y[i] : -raw.y[i];
  }
  return sol;
}

DualityReport check_certificates(const LinearProgram& lp,
                                 const LPSolution& sol) {
  validate(lp);
  if (sol.status != SolveStatus::Optimal) {
    throw ContractError("certificate check requires an optimal solution");
  }
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  if (static_cast<int>(sol.primal.size()) != n ||
      static_cast<int>(sol.dual.size()) != m) {
    throw ContractError("solution vectors do not match the program shape");
  }
  const bool maximize = lp.direction == Direction::Maximize;

  DualityReport rep;
  rep.primal_feasible = rep.dual_feasible = true;
  rep.objectives_match = rep.slackness_ok = true;
  auto flag = [&rep](bool& family, std::string check, std::string where,
                     int index, std::string detail) {
    family = false;
    rep.violations.push_back(
        {std::move(check), std::move(where), index, std::move(detail)});
  };

  std::vector<Rational> row_slack(m);
  for (int i = 0; i < m; ++i) {
    Rational lhs(0);
    for (const auto& [col, coef] : lp.rows[i].entries) {
      lhs += coef * sol.primal[col];
    }
    const Rational& rhs = lp.rows[i].rhs;
    row_slack[i] = lp.rows[i].sense == Sense::LessEqual ? rhs - lhs : lhs - rhs;
    if (row_slack[i] < Rational(0)) {
      flag(rep.primal_feasible, "primal-feasibility", "row", i,
           "row value " + lhs.str() + " breaks its bound " + rhs.str());
    }
  }
  for (int j = 0; j < n; ++j) {
    if (sol.primal[j] < lp.lower_bound(j)) {
      flag(rep.primal_feasible, "primal-feasibility", "column", j,
           "variable below its lower bound");
    }
  }

  for (int i = 0; i < m; ++i) {
    const bool wants_nonneg =
        maximize == (lp.rows[i].sense == Sense::LessEqual);
    if (wants_nonneg ? sol.dual[i] < Rational(0) : sol.dual[i] > Rational(0)) {
      flag(rep.dual_feasible, "dual-feasibility", "row", i,
           "multiplier " + sol.dual[i].str() + " has the wrong sign");
    }
  }
  std::vector<Rational> reduced(n);
  for (int j = 0; j < n; ++j) reduced[j] = lp.objective[j];
  for (int i = 0; i < m; ++i) {
    for (const auto& [col, coef] : lp.rows[i].entries) {
      reduced[col] -= sol.dual[i] * coef;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (maximize ? reduced[j] > Rational(0) : reduced[j] < Rational(0)) {
      flag(rep.dual_feasible, "dual-feasibility", "column", j,
           "reduced cost " + reduced[j].str() + " has the wrong sign");
    }
  }

  Rational primal_value(0);
  for (int j = 0; j < n; ++j) primal_value += lp.objective[j] * sol.primal[j];
  Rational dual_value(0);
  for (int i = 0; i < m; ++i) dual_value += sol.dual[i] * lp.rows[i].rhs;
  for (int j = 0; j < n; ++j) dual_value += reduced[j] * lp.lower_bound(j);
  if (primal_value != sol.value) {
    flag(rep.objectives_match, "objective-mismatch", "value", -1,
         "reported value " + sol.value.str() + " differs from c.x = " +
             primal_value.str());
  }
  if (primal_value != dual_value) {
    flag(rep.objectives_match, "objective-mismatch", "value", -1,
         "primal value " + primal_value.str() + " differs from dual value " +
             dual_value.str());
  }

  for (int i = 0; i < m; ++i) {
    if (!(sol.dual[i] * row_slack[i]).is_zero()) {
      flag(rep.slackness_ok, "complementary-slackness", "row", i,
           "positive multiplier on a slack row");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!(reduced[j] * (sol.primal[j] - lp.lower_bound(j))).is_zero()) {
      flag(rep.slackness_ok, "complementary-slackness", "column", j,
           "nonzero reduced cost on an interior variable");
    }
  }
  return rep;
}

namespace {

struct SearchBox {
  std::vector<long long> lo;
  std::vector<long long> hi;
};

LinearProgram boxed_program(const LinearProgram& base, const Rational& target,
                            const SearchBox& box, long long cap) {
  LinearProgram node = base;
  const int n = base.num_vars();
  LinearProgram::Row pin;
  for (int j = 0; j < n; ++j) {
    if (!base.objective[j].is_zero()) pin.entries.push_back({j, base.objective[j]});
  }
  pin.sense = Sense::GreaterEqual;
  pin.rhs = target;
  node.rows.push_back(std::move(pin));
  node.lower_bounds.assign(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    node.lower_bounds[j] = Rational(box.lo[j]);
    if (box.hi[j] < cap || base.objective[j].is_zero()) {
      LinearProgram::Row lid;
      lid.entries.push_back({j, Rational(1)});
      lid.sense = Sense::LessEqual;
      lid.rhs = Rational(box.hi[j]);
      node.rows.push_back(std::move(lid));
    }
  }
  return node;
}

bool search(const LinearProgram& base, const Rational& target, SearchBox box,
            long long cap, IntegralDualWitness& out) {
  const LPSolution sol = solve_lp(boxed_program(base, target, box, cap));
  if (sol.status == SolveStatus::Infeasible) return false;
  if (sol.status == SolveStatus::Unbounded) {
    throw Error("internal", "capped covering search cannot be unbounded");
  }
  if (sol.value > target) return false;
  int frac = -1;
  for (int j = 0; j < base.num_vars(); ++j) {
    if (!sol.primal[j].is_integer()) {
      frac = j;
      break;
    }
  }
  if (frac < 0) {
    out.found = true;
    out.objective_value = sol.value;
    out.assignment.clear();
    for (const auto& v : sol.primal) out.assignment.push_back(v.to_integer());
    return true;
  }
  SearchBox left = box;
  left.hi[frac] = sol.primal[frac].floor().to_integer();
  if (left.hi[frac] >= left.lo[frac] && search(base, target, left, cap, out)) {
    return true;
  }
  SearchBox right = std::move(box);
  right.lo[frac] = sol.primal[frac].ceil().to_integer();
  if (right.lo[frac] <= right.hi[frac]) {
    return search(base, target, right, cap, out);
  }
  return false;
}

}  // namespace

IntegralDualWitness find_integral_dual(const LinearProgram& lp,
                                       const Rational& target) {
  validate(lp);
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  bool covering = lp.direction == Direction::Minimize;
  for (const auto& c : lp.objective) {
    if (c < Rational(0)) covering = false;
  }
  if (!lp.lower_bounds.empty()) {
    for (const auto& b : lp.lower_bounds) {
      if (!b.is_zero()) covering = false;
    }
  }
  for (const auto& row : lp.rows) {
    if (row.sense != Sense::GreaterEqual) covering = false;
    for (const auto& [col, coef] : row.entries) {
      (void)col;
      if (coef < Rational(0)) covering = false;
    }
  }
  if (!covering) {
    throw ResourceLimitError(
        "integral dual search needs a nonnegative covering program "
        "(minimize, >= rows, zero lower bounds); no finite search bound is "
        "derivable otherwise");
  }

  IntegralDualWitness witness;
  if (target < Rational(0)) return witness;
  if (all_integral(lp.objective) && !target.is_integer()) return witness;

  bool any_objective = false;
  for (const auto& c : lp.objective) {
    if (!c.is_zero()) any_objective = true;
  }
  if (!any_objective) {
    // Every feasible point has value zero, so the target must be zero; the
    // uniform vector just large enough covers every row (each row owns a
    // positive coefficient, per validate).
    if (!target.is_zero()) return witness;
    long long uniform = 0;
    for (const auto& row : lp.rows) {
      if (row.rhs <= Rational(0)) continue;
      Rational row_sum(0);
      for (const auto& [col, coef] : row.entries) {
        (void)col;
        row_sum += coef;
      }
      const Rational need = row.rhs / row_sum;
      uniform = std::max(uniform, need.ceil().to_integer());
    }
    witness.found = true;
    witness.assignment.assign(n, uniform);
    witness.objective_value = Rational(0);
    return witness;
  }

  Rational max_rhs(0);
  for (const auto& row : lp.rows) {
    if (row.rhs > max_rhs) max_rhs = row.rhs;
  }
  const long long cap = max_rhs.ceil().to_integer() * std::max(m, 1);

  SearchBox box;
  box.lo.assign(n, 0);
  box.hi.assign(n, cap);
  search(lp, target, std::move(box), cap, witness);
  return witness;
}

}  // namespace cgcore
