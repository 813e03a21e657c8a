#pragma once

// Shared test machinery: independent brute-force oracles and seeded random
// instance generators.  The oracles deliberately avoid the library's own
// algorithms; they recompute answers from definitions so that agreement is
// meaningful.

#include <algorithm>
#include <optional>
#include <vector>

#include "lp.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "subsets.hpp"

namespace testsupport {

using cgcore::LinearProgram;
using cgcore::LPSolution;
using cgcore::Mask;
using cgcore::Rational;
using cgcore::Rng;
using cgcore::Sense;

// ---------------------------------------------------------------------------
// Exact Gaussian elimination: solve a square system, or report that it is
// singular.  Used by the vertex-enumeration oracle.
inline std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline bool lp_point_feasible(const LinearProgram& lp,
                              const std::vector<Rational>& x) {
  for (const auto& row : lp.rows) {
    Rational lhs(0);
    for (const auto& [col, coef] : row.entries) lhs += coef * x[col];
    if (row.sense == Sense::LessEqual ? lhs > row.rhs : lhs < row.rhs) {
      return false;
    }
  }
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (x[j] < lp.lower_bound(j)) return false;
  }
  return true;
}

inline Rational lp_objective_at(const LinearProgram& lp,
                                const std::vector<Rational>& x) {
  Rational v(0);
  for (int j = 0; j < lp.num_vars(); ++j) v += lp.objective[j] * x[j];
  return v;
}

// Enumerates every basic point of the system {rows, x >= lb}: all choices of
// n constraints taken tight.  Because the lower bounds make the region
// pointed, the region is nonempty iff some basic point is feasible, and any
// finite optimum is attained at one of them.
struct VertexSweep {
  bool any_feasible = false;
  std::optional<Rational> best;  // best feasible basic value (max direction
                                 // handled by caller via sign)
  std::vector<std::vector<Rational>> feasible_points;
};

inline VertexSweep enumerate_vertices(const LinearProgram& lp) {
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  VertexSweep sweep;
  if (n == 0) {
    sweep.any_feasible = true;
    sweep.best = Rational(0);
    sweep.feasible_points.push_back({});
    return sweep;
  }
  std::vector<int> pick;
  std::vector<int> pool(m + n);
  for (int i = 0; i < m + n; ++i) pool[i] = i;

  const bool maximize = lp.direction == cgcore::Direction::Maximize;
  auto consider = [&](const std::vector<int>& chosen) {
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> b(n);
    for (int k = 0; k < n; ++k) {
      const int id = chosen[k];
      if (id < m) {
        for (const auto& [col, coef] : lp.rows[id].entries) a[k][col] = coef;
        b[k] = lp.rows[id].rhs;
      } else {
        a[k][id - m] = Rational(1);
        b[k] = lp.lower_bound(id - m);
      }
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x || !lp_point_feasible(lp, *x)) return;
    sweep.any_feasible = true;
    const Rational v = lp_objective_at(lp, *x);
    if (!sweep.best || (maximize ? v > *sweep.best : v < *sweep.best)) {
      sweep.best = v;
    }
    sweep.feasible_points.push_back(*x);
  };

  // Iterative combination enumeration over C(m+n, n).
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    std::vector<int> chosen(n);
    for (int i = 0; i < n; ++i) chosen[i] = pool[idx[i]];
    consider(chosen);
    int k = n - 1;
    while (k >= 0 && idx[k] == m + n - n + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
  }
  return sweep;
}

// Checks an unboundedness certificate: from a feasible point, the ray keeps
// every constraint satisfied forever and strictly improves the objective.
inline bool ray_is_valid(const LinearProgram& lp,
                         const std::vector<Rational>& point,
                         const std::vector<Rational>& ray) {
  if (!lp_point_feasible(lp, point)) return false;
  if (ray.size() != static_cast<size_t>(lp.num_vars())) return false;
  for (const auto& row : lp.rows) {
    Rational along(0);
    for (const auto& [col, coef] : row.entries) along += coef * ray[col];
    if (row.sense == Sense::LessEqual ? along > Rational(0)
                                      : along < Rational(0)) {
      return false;
    }
  }
  for (const auto& d : ray) {
    if (d < Rational(0)) return false;
  }
  Rational gain(0);
  for (int j = 0; j < lp.num_vars(); ++j) gain += lp.objective[j] * ray[j];
  return lp.direction == cgcore::Direction::Maximize ? gain > Rational(0)
                                                     : gain < Rational(0);
}

// ---------------------------------------------------------------------------
// Graph oracles over plain adjacency masks (independent of the Graph class).

inline Rational brute_best_stable(int n, const std::vector<Mask>& adj,
                                  const std::vector<Rational>& w, Mask inside) {
  Rational best(0);
  for (Mask s = 0;; s = (s - inside) & inside) {
    bool stable = true;
    for (Mask rest = s; rest && stable; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (adj[v] & s) stable = false;
    }
    if (stable) {
      Rational total(0);
      for (Mask rest = s; rest; rest &= rest - 1) {
        total += w[std::countr_zero(rest)];
      }
      if (total > best) best = total;
    }
    if (s == inside) break;
  }
  (void)n;
  return best;
}

inline Rational brute_best_clique(int n, const std::vector<Mask>& adj,
                                  const std::vector<Rational>& w, Mask inside) {
  Rational best(0);
  for (Mask s = 0;; s = (s - inside) & inside) {
    bool clique = true;
    for (Mask rest = s; rest && clique; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((s & ~(adj[v] | (1ULL << v))) != 0) clique = false;
    }
    if (clique) {
      Rational total(0);
      for (Mask rest = s; rest; rest &= rest - 1) {
        total += w[std::countr_zero(rest)];
      }
      if (total > best) best = total;
    }
    if (s == inside) break;
  }
  (void)n;
  return best;
}

inline int brute_omega(const std::vector<Mask>& adj, Mask inside) {
  int best = 0;
  for (Mask s = 0;; s = (s - inside) & inside) {
    bool clique = true;
    for (Mask rest = s; rest && clique; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((s & ~(adj[v] | (1ULL << v))) != 0) clique = false;
    }
    if (clique) best = std::max(best, cgcore::popcount(s));
    if (s == inside) break;
  }
  return best;
}

// Smallest k such that the vertices in `inside` admit a proper k-coloring,
// found by trying every assignment (k^|inside| sweeps; test sizes only).
inline int brute_chi(const std::vector<Mask>& adj, Mask inside) {
  const auto verts = cgcore::mask_to_vector(inside);
  const int cnt = static_cast<int>(verts.size());
  if (cnt == 0) return 0;
  for (int k = 1; k <= cnt; ++k) {
    std::vector<int> color(cnt, 0);
    while (true) {
      bool proper = true;
      for (int a = 0; a < cnt && proper; ++a) {
        for (int b = a + 1; b < cnt && proper; ++b) {
          if ((adj[verts[a]] >> verts[b]) & 1ULL) {
            if (color[a] == color[b]) proper = false;
          }
        }
      }
      if (proper) return k;
      int pos = cnt - 1;
      while (pos >= 0 && color[pos] == k - 1) color[pos--] = 0;
      if (pos < 0) break;
      ++color[pos];
    }
  }
  return cnt;
}

// Maximum-weight matching by recursion over the edge list.
inline Rational brute_best_matching(
    const std::vector<std::pair<int, int>>& edges,
    const std::vector<Rational>& w, Mask allowed_vertices) {
  struct Rec {
    const std::vector<std::pair<int, int>>& edges;
    const std::vector<Rational>& w;
    Rational go(size_t at, Mask used, Mask allowed) {
      if (at == edges.size()) return Rational(0);
      Rational best = go(at + 1, used, allowed);
      const auto [u, v] = edges[at];
      const Mask need = (1ULL << u) | (1ULL << v);
      if ((need & ~allowed) == 0 && (need & used) == 0) {
        const Rational with = w[at] + go(at + 1, used | need, allowed);
        if (with > best) best = with;
      }
      return best;
    }
  };
  Rec rec{edges, w};
  return rec.go(0, 0, allowed_vertices);
}

// ---------------------------------------------------------------------------
// Random LP generator for the solver-vs-oracle sweep: up to `max_vars`
// variables and `max_rows` rows, small integer data, occasional nonzero
// lower bounds and mixed senses/directions.
inline LinearProgram random_lp(Rng& rng, int max_vars = 6, int max_rows = 6) {
  LinearProgram lp;
  const int n = static_cast<int>(rng.uniform(1, max_vars));
  const int m = static_cast<int>(rng.uniform(1, max_rows));
  lp.direction = rng.chance(1, 2) ? cgcore::Direction::Maximize
                                  : cgcore::Direction::Minimize;
  lp.objective.resize(n);
  for (auto& c : lp.objective) c = Rational(rng.uniform(-5, 5));
  if (rng.chance(1, 4)) {
    lp.lower_bounds.resize(n);
    for (auto& b : lp.lower_bounds) b = Rational(rng.uniform(-3, 3));
  }
  for (int i = 0; i < m; ++i) {
    LinearProgram::Row row;
    for (int j = 0; j < n; ++j) {
      if (rng.chance(3, 5)) {
        const long long coef = rng.uniform(-4, 4);
        if (coef != 0) row.entries.push_back({j, Rational(coef)});
      }
    }
    if (row.entries.empty()) {
      row.entries.push_back({static_cast<int>(rng.below(n)),
                             Rational(rng.uniform(1, 4))});
    }
    row.sense = rng.chance(7, 10) ? Sense::LessEqual : Sense::GreaterEqual;
    // Bias toward feasible instances: <= rows mostly get nonnegative slack.
    row.rhs = Rational(rng.uniform(row.sense == Sense::LessEqual ? 0 : -6, 9));
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

}  // namespace testsupport
