#include "game.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "errors.hpp"

namespace cgcore {

std::string game_kind_name(GameKind kind) {
  switch (kind) {
    case GameKind::Assignment: return "assignment";
    case GameKind::StableSet: return "stable_set";
    case GameKind::Clique: return "clique";
    case GameKind::Matroid: return "matroid";
    case GameKind::GenericPacking: return "generic_packing";
  }
  throw ContractError("unknown game kind");
}

namespace {

void check_nonnegative(const std::vector<Rational>& weights) {
  for (const Rational& w : weights) {
    if (w < Rational(0)) {
      throw MalformedInputError("weights must be nonnegative; got " + w.str(),
                                "negative-weight");
    }
  }
}

}  // namespace

GameInstance GameInstance::assignment(Graph g,
                                      std::vector<Rational> edge_weights,
                                      Mask part_u, Mask part_v) {
  const int n = g.vertex_count();
  const Mask full = full_mask(n);
  if (((part_u | part_v) & ~full) != 0) {
    throw MalformedInputError("a side mentions a vertex outside the graph",
                              "invalid-key");
  }
  if ((part_u & part_v) != 0) {
    throw MalformedInputError(
        "the two sides overlap on " + set_to_string(part_u & part_v),
        "not-bipartite");
  }
  if ((part_u | part_v) != full) {
    throw MalformedInputError(
        "the two sides must cover every vertex exactly once", "not-bipartite");
  }
  const auto edges = g.edges();
  for (const auto& [u, v] : edges) {
    const bool crosses = (contains(part_u, u) && contains(part_v, v)) ||
                         (contains(part_v, u) && contains(part_u, v));
    if (!crosses) {
      throw MalformedInputError("edge (" + std::to_string(u) + "," +
                                    std::to_string(v) +
                                    ") joins two vertices on the same side",
                                "not-bipartite");
    }
  }
  if (edge_weights.size() != edges.size()) {
    throw MalformedInputError("expected one weight per edge; got " +
                              std::to_string(edge_weights.size()) + " for " +
                              std::to_string(edges.size()) + " edges");
  }
  check_nonnegative(edge_weights);
  GameInstance out;
  out.kind_ = GameKind::Assignment;
  out.data_ = AssignmentData{std::move(g), std::move(edge_weights), part_u,
                             part_v};
  return out;
}

GameInstance GameInstance::stable_set(WeightedGraph wg) {
  GameInstance out;
  out.kind_ = GameKind::StableSet;
  out.data_ = make_weighted(std::move(wg.graph), std::move(wg.weights));
  return out;
}

GameInstance GameInstance::clique(WeightedGraph wg) {
  GameInstance out;
  out.kind_ = GameKind::Clique;
  out.data_ = make_weighted(std::move(wg.graph), std::move(wg.weights));
  return out;
}

GameInstance GameInstance::matroid(WeightedMatroid wm, int bound) {
  WeightedMatroid checked =
      make_weighted(std::move(wm.matroid), std::move(wm.weights));
  const AxiomReport& axioms = verify_rank_axioms(checked.matroid, bound);
  if (!axioms.ok) {
    throw MalformedInputError(
        "matroid fails axiom " + axioms.check + ": " + axioms.detail,
        "matroid-axioms");
  }
  GameInstance out;
  out.kind_ = GameKind::Matroid;
  out.data_ = std::move(checked);
  return out;
}

GameInstance GameInstance::generic_packing(std::vector<std::vector<int>> matrix,
                                           std::vector<Rational> weights) {
  const int n = static_cast<int>(matrix.size());
  if (n > 62) {
    throw ResourceLimitError("packing games go up to 62 agents; got " +
                             std::to_string(n));
  }
  const std::size_t m = weights.size();
  for (const auto& row : matrix) {
    if (row.size() != m) {
      throw MalformedInputError(
          "every agent row needs one entry per object; expected " +
              std::to_string(m) + ", got " + std::to_string(row.size()),
          "matrix-entries");
    }
    for (int cell : row) {
      if (cell != 0 && cell != 1) {
        throw MalformedInputError(
            "matrix entries must be 0 or 1; got " + std::to_string(cell),
            "matrix-entries");
      }
    }
  }
  check_nonnegative(weights);
  std::vector<Mask> columns(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      if (matrix[i][j]) columns[j] |= 1ULL << i;
    }
    if (columns[j] == 0) {
      throw MalformedInputError(
          "object " + std::to_string(j) + " touches no agent", "empty-column");
    }
  }
  GameInstance out;
  out.kind_ = GameKind::GenericPacking;
  out.data_ = PackingData{n, std::move(matrix), std::move(columns),
                          std::move(weights)};
  return out;
}

int GameInstance::agent_count() const {
  switch (kind_) {
    case GameKind::Assignment:
      return std::get<AssignmentData>(data_).graph.vertex_count();
    case GameKind::StableSet:
    case GameKind::Clique:
      return std::get<WeightedGraph>(data_).graph.vertex_count();
    case GameKind::Matroid:
      return std::get<WeightedMatroid>(data_).matroid.element_count();
    case GameKind::GenericPacking:
      return std::get<PackingData>(data_).agent_count;
  }
  throw ContractError("unknown game kind");
}

const AssignmentData& GameInstance::assignment_data() const {
  if (kind_ != GameKind::Assignment) {
    throw ContractError("this is a " + game_kind_name(kind_) +
                        " game, not an assignment game");
  }
  return std::get<AssignmentData>(data_);
}

const WeightedGraph& GameInstance::graph_data() const {
  if (kind_ != GameKind::StableSet && kind_ != GameKind::Clique) {
    throw ContractError("this is a " + game_kind_name(kind_) +
                        " game, not a graph game");
  }
  return std::get<WeightedGraph>(data_);
}

const WeightedMatroid& GameInstance::matroid_data() const {
  if (kind_ != GameKind::Matroid) {
    throw ContractError("this is a " + game_kind_name(kind_) +
                        " game, not a matroid game");
  }
  return std::get<WeightedMatroid>(data_);
}

const PackingData& GameInstance::packing_data() const {
  if (kind_ != GameKind::GenericPacking) {
    throw ContractError("this is a " + game_kind_name(kind_) +
                        " game, not a generic packing game");
  }
  return std::get<PackingData>(data_);
}

AgentImputation make_agent_imputation(std::map<int, Rational> payoffs) {
  for (const auto& [agent, value] : payoffs) {
    if (agent < 0) {
      throw MalformedInputError(
          "agent ids must be nonnegative; got " + std::to_string(agent),
          "invalid-key");
    }
    if (value < Rational(0)) {
      throw MalformedInputError(
          "payoffs must be nonnegative; agent " + std::to_string(agent) +
              " has " + value.str(),
          "negative-weight");
    }
  }
  return AgentImputation{std::move(payoffs)};
}

SatisfactionImputation make_satisfaction_imputation(
    std::map<Mask, Rational> support) {
  for (const auto& [set, value] : support) {
    if (set == 0) {
      throw MalformedInputError("satisfaction keys must be nonempty sets",
                                "invalid-key");
    }
    if (value < Rational(0)) {
      throw MalformedInputError(
          "satisfaction values must be nonnegative; " + set_to_string(set) +
              " has " + value.str(),
          "negative-weight");
    }
  }
  return SatisfactionImputation{std::move(support)};
}

Rational imputation_total(const Imputation& imp) {
  Rational total;
  if (const auto* agent = std::get_if<AgentImputation>(&imp)) {
    for (const auto& [id, value] : agent->payoffs) total += value;
  } else {
    for (const auto& [set, value] :
         std::get<SatisfactionImputation>(imp).support) {
      total += value;
    }
  }
  return total;
}

Allocation allocate_top_down(const SatisfactionImputation& y, Mask coalition) {
  if (coalition == 0) {
    throw ContractError("allocation needs a nonempty coalition");
  }
  Allocation out;
  for (const auto& [set, value] : y.support) {
    const Mask inside = set & coalition;
    if (inside == 0) continue;
    out.sub_support[inside] += value;
    out.total += value;
  }
  return out;
}

Rational satisfaction(const SatisfactionImputation& y, Mask coalition) {
  Rational total;
  for (const auto& [set, value] : y.support) {
    if ((set & coalition) != 0) total += value;
  }
  return total;
}

namespace {

void check_agent_bound(int n, int bound, const std::string& what) {
  if (bound < 0) throw ContractError("the bound must be nonnegative");
  if (n > bound) {
    throw ResourceLimitError(what + " enumerates all 2^n coalitions; " +
                             std::to_string(n) + " agents exceed bound " +
                             std::to_string(bound));
  }
}

// Columns of the assignment (matching) relaxation restricted to a coalition,
// solved exactly; the vertex is a matching by total unimodularity, which the
// solver's output is checked against rather than assumed.
Rational assignment_worth(const AssignmentData& a, Mask coalition) {
  const auto edges = a.graph.edges();
  std::vector<int> keep;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const Mask ends = (1ULL << edges[j].first) | (1ULL << edges[j].second);
    if ((ends & ~coalition) == 0) keep.push_back(static_cast<int>(j));
  }
  if (keep.empty()) return Rational(0);

  LinearProgram lp;
  lp.direction = Direction::Maximize;
  for (int j : keep) lp.objective.push_back(a.edge_weights[j]);
  const int n = a.graph.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (!contains(coalition, v)) continue;
    LinearProgram::Row row;
    for (std::size_t c = 0; c < keep.size(); ++c) {
      const auto& e = edges[keep[c]];
      if (e.first == v || e.second == v) {
        row.entries.emplace_back(static_cast<int>(c), Rational(1));
      }
    }
    if (row.entries.empty()) continue;
    row.sense = Sense::LessEqual;
    row.rhs = Rational(1);
    lp.rows.push_back(std::move(row));
  }
  const LPSolution sol = solve_lp(lp);
  if (sol.status != SolveStatus::Optimal) {
    throw Error("internal", "the matching relaxation must have an optimum");
  }
  for (const Rational& x : sol.primal) {
    if (!x.is_zero() && x != Rational(1)) {
      throw Error("internal",
                  "the matching relaxation returned a fractional vertex");
    }
  }
  return sol.value;
}

Rational packing_worth(const PackingData& p, Mask coalition) {
  std::vector<int> use;
  for (std::size_t j = 0; j < p.columns.size(); ++j) {
    if ((p.columns[j] & ~coalition) == 0 && !p.weights[j].is_zero()) {
      use.push_back(static_cast<int>(j));
    }
  }
  std::vector<Rational> suffix(use.size() + 1);
  for (std::size_t k = use.size(); k-- > 0;) {
    suffix[k] = suffix[k + 1] + p.weights[use[k]];
  }
  Rational best;
  // Take/skip over pairwise agent-disjoint objects, cut when even the whole
  // remaining suffix cannot beat the incumbent.
  auto dfs = [&](auto&& self, std::size_t k, Mask taken,
                 const Rational& value) -> void {
    if (value > best) best = value;
    if (k == use.size()) return;
    if (value + suffix[k] <= best) return;
    if ((p.columns[use[k]] & taken) == 0) {
      self(self, k + 1, taken | p.columns[use[k]],
           value + p.weights[use[k]]);
    }
    self(self, k + 1, taken, value);
  };
  dfs(dfs, 0, 0, Rational(0));
  return best;
}

}  // namespace

Rational worth(const GameInstance& game, Mask coalition, int bound) {
  const Mask full = full_mask(game.agent_count());
  if ((coalition & ~full) != 0) {
    throw ContractError("the coalition mentions agents outside the game");
  }
  switch (game.kind()) {
    case GameKind::Assignment:
      return assignment_worth(game.assignment_data(), coalition);
    case GameKind::StableSet:
      return max_weight_stable_set(game.graph_data(), coalition).second;
    case GameKind::Clique:
      return max_weight_clique(game.graph_data(), coalition).second;
    case GameKind::Matroid:
      return greedy_max_weight_independent(game.matroid_data(), coalition,
                                           /*waive_axioms=*/false, bound)
          .second;
    case GameKind::GenericPacking:
      return packing_worth(game.packing_data(), coalition);
  }
  throw ContractError("unknown game kind");
}

std::vector<Rational> compute_worth_table(const GameInstance& game,
                                          int bound) {
  const int n = game.agent_count();
  check_agent_bound(n, bound, "the worth table");
  std::vector<Rational> table(std::size_t(1) << n);
  for (Mask t = 1; t < table.size(); ++t) {
    table[t] = worth(game, t, bound);
  }
  return table;
}

GameLPs build_lps(const GameInstance& game, int bound) {
  GameLPs out;
  out.primal.direction = Direction::Maximize;
  out.dual.direction = Direction::Minimize;
  switch (game.kind()) {
    case GameKind::Assignment: {
      const AssignmentData& a = game.assignment_data();
      const auto edges = a.graph.edges();
      out.primal.objective = a.edge_weights;
      const int n = a.graph.vertex_count();
      std::vector<int> row_of(n, -1);
      for (int v = 0; v < n; ++v) {
        LinearProgram::Row row;
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if (edges[j].first == v || edges[j].second == v) {
            row.entries.emplace_back(static_cast<int>(j), Rational(1));
          }
        }
        if (row.entries.empty()) continue;
        row.sense = Sense::LessEqual;
        row.rhs = Rational(1);
        row_of[v] = out.primal.num_rows();
        out.primal.rows.push_back(std::move(row));
        out.row_objects.push_back(1ULL << v);
      }
      out.dual.objective.assign(out.primal.num_rows(), Rational(1));
      for (std::size_t j = 0; j < edges.size(); ++j) {
        LinearProgram::Row row;
        row.entries.emplace_back(row_of[edges[j].first], Rational(1));
        row.entries.emplace_back(row_of[edges[j].second], Rational(1));
        row.sense = Sense::GreaterEqual;
        row.rhs = a.edge_weights[j];
        out.dual.rows.push_back(std::move(row));
        out.col_objects.push_back((1ULL << edges[j].first) |
                                  (1ULL << edges[j].second));
      }
      break;
    }
    case GameKind::StableSet:
    case GameKind::Clique: {
      const WeightedGraph& wg = game.graph_data();
      const Graph host = game.kind() == GameKind::Clique
                             ? complement(wg.graph)
                             : wg.graph;
      const int n = host.vertex_count();
      out.primal.objective = wg.weights;
      std::vector<Mask> cliques = enumerate_maximal_cliques(host);
      for (Mask q : cliques) {
        if (q == 0) continue;
        LinearProgram::Row row;
        for (int v : mask_to_vector(q)) {
          row.entries.emplace_back(v, Rational(1));
        }
        row.sense = Sense::LessEqual;
        row.rhs = Rational(1);
        out.primal.rows.push_back(std::move(row));
        out.row_objects.push_back(q);
      }
      out.dual.objective.assign(out.primal.num_rows(), Rational(1));
      for (int v = 0; v < n; ++v) {
        LinearProgram::Row row;
        for (int r = 0; r < out.primal.num_rows(); ++r) {
          if (contains(out.row_objects[r], v)) {
            row.entries.emplace_back(r, Rational(1));
          }
        }
        row.sense = Sense::GreaterEqual;
        row.rhs = wg.weights[v];
        out.dual.rows.push_back(std::move(row));
        out.col_objects.push_back(1ULL << v);
      }
      break;
    }
    case GameKind::Matroid: {
      const WeightedMatroid& wm = game.matroid_data();
      const int n = wm.matroid.element_count();
      check_agent_bound(n, bound, "the matroid relaxation");
      out.primal.objective = wm.weights;
      const Mask full = full_mask(n);
      for (Mask s = 1; s != 0 && s <= full; ++s) {
        LinearProgram::Row row;
        for (int e : mask_to_vector(s)) {
          row.entries.emplace_back(e, Rational(1));
        }
        row.sense = Sense::LessEqual;
        row.rhs = Rational(wm.matroid.rank(s));
        out.primal.rows.push_back(std::move(row));
        out.row_objects.push_back(s);
        out.dual.objective.push_back(Rational(wm.matroid.rank(s)));
      }
      for (int e = 0; e < n; ++e) {
        LinearProgram::Row row;
        for (int r = 0; r < out.primal.num_rows(); ++r) {
          if (contains(out.row_objects[r], e)) {
            row.entries.emplace_back(r, Rational(1));
          }
        }
        row.sense = Sense::GreaterEqual;
        row.rhs = wm.weights[e];
        out.dual.rows.push_back(std::move(row));
        out.col_objects.push_back(1ULL << e);
      }
      break;
    }
    case GameKind::GenericPacking: {
      const PackingData& p = game.packing_data();
      out.primal.objective = p.weights;
      std::vector<int> row_of(p.agent_count, -1);
      for (int i = 0; i < p.agent_count; ++i) {
        LinearProgram::Row row;
        for (std::size_t j = 0; j < p.columns.size(); ++j) {
          if (contains(p.columns[j], i)) {
            row.entries.emplace_back(static_cast<int>(j), Rational(1));
          }
        }
        if (row.entries.empty()) continue;
        row.sense = Sense::LessEqual;
        row.rhs = Rational(1);
        row_of[i] = out.primal.num_rows();
        out.primal.rows.push_back(std::move(row));
        out.row_objects.push_back(1ULL << i);
      }
      out.dual.objective.assign(out.primal.num_rows(), Rational(1));
      for (std::size_t j = 0; j < p.columns.size(); ++j) {
        LinearProgram::Row row;
        for (int i : mask_to_vector(p.columns[j])) {
          row.entries.emplace_back(row_of[i], Rational(1));
        }
        row.sense = Sense::GreaterEqual;
        row.rhs = p.weights[j];
        out.dual.rows.push_back(std::move(row));
        out.col_objects.push_back(p.columns[j]);
      }
      break;
    }
  }
  return out;
}

DualCoreSolution solve_dual_core(const GameInstance& game, int bound) {
  DualCoreSolution out;
  out.lps = build_lps(game, bound);
  out.primal_solution = solve_lp(out.lps.primal);
  if (out.primal_solution.status != SolveStatus::Optimal) {
    throw Error("internal", "every game relaxation is bounded and feasible");
  }
  out.lp_value = out.primal_solution.value;
  out.worth_grand = worth(game, full_mask(game.agent_count()), bound);
  out.lp_matches_worth = out.lp_value == out.worth_grand;
  out.primal_integral = true;
  for (const Rational& x : out.primal_solution.primal) {
    if (!x.is_zero() && x != Rational(1)) {
      out.primal_integral = false;
      break;
    }
  }

  const std::vector<Rational>& duals = out.primal_solution.dual;
  for (const Rational& y : duals) {
    if (y < Rational(0)) {
      throw Error("internal", "covering duals must be nonnegative");
    }
  }
  switch (game.kind()) {
    case GameKind::Assignment: {
      if (!out.primal_integral) {
        throw Error("internal",
                    "the matching relaxation returned a fractional vertex");
      }
      AgentImputation imp;
      const int n = game.agent_count();
      std::vector<Rational> per_agent(n);
      for (std::size_t r = 0; r < duals.size(); ++r) {
        per_agent[std::countr_zero(out.lps.row_objects[r])] = duals[r];
      }
      for (int v = 0; v < n; ++v) imp.payoffs[v] = per_agent[v];
      out.imputation = std::move(imp);
      break;
    }
    case GameKind::GenericPacking: {
      AgentImputation imp;
      const int n = game.agent_count();
      std::vector<Rational> per_agent(n);
      for (std::size_t r = 0; r < duals.size(); ++r) {
        per_agent[std::countr_zero(out.lps.row_objects[r])] = duals[r];
      }
      for (int v = 0; v < n; ++v) imp.payoffs[v] = per_agent[v];
      out.imputation = std::move(imp);
      break;
    }
    case GameKind::StableSet:
    case GameKind::Clique: {
      SatisfactionImputation imp;
      for (std::size_t r = 0; r < duals.size(); ++r) {
        if (!duals[r].is_zero()) {
          imp.support[out.lps.row_objects[r]] = duals[r];
        }
      }
      out.imputation = std::move(imp);
      break;
    }
    case GameKind::Matroid: {
      if (!out.lp_matches_worth) {
        throw Error("internal",
                    "the matroid relaxation must match the greedy optimum");
      }
      SatisfactionImputation imp;
      Rational packaged_total;
      for (std::size_t r = 0; r < duals.size(); ++r) {
        const Rational scaled =
            duals[r] *
            Rational(game.matroid_data().matroid.rank(out.lps.row_objects[r]));
        if (!scaled.is_zero()) {
          imp.support[out.lps.row_objects[r]] = scaled;
          packaged_total += scaled;
        }
      }
      if (packaged_total != out.lp_value) {
        throw Error("internal",
                    "the rank-scaled dual must total the optimum exactly");
      }
      out.imputation = std::move(imp);
      break;
    }
  }
  return out;
}

namespace {

bool is_clique_of(const Graph& g, Mask set) {
  const auto verts = mask_to_vector(set);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

bool is_stable_of(const Graph& g, Mask set) {
  const auto verts = mask_to_vector(set);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

void validate_imputation(const GameInstance& game, const Imputation& imp) {
  const GameKind kind = game.kind();
  const int n = game.agent_count();
  const Mask full = full_mask(n);
  const bool wants_agent = kind == GameKind::Assignment ||
                           kind == GameKind::GenericPacking;
  if (wants_agent != std::holds_alternative<AgentImputation>(imp)) {
    throw ContractError("a " + game_kind_name(kind) + " game takes " +
                        (wants_agent ? "an agent imputation"
                                     : "a satisfaction imputation"));
  }
  if (wants_agent) {
    for (const auto& [agent, value] : std::get<AgentImputation>(imp).payoffs) {
      if (agent < 0 || agent >= n) {
        throw MalformedInputError(
            "agent " + std::to_string(agent) + " is outside 0.." +
                std::to_string(n - 1),
            "invalid-key");
      }
    }
    return;
  }
  for (const auto& [set, value] :
       std::get<SatisfactionImputation>(imp).support) {
    if (set == 0 || (set & ~full) != 0) {
      throw MalformedInputError(
          "satisfaction key " + set_to_string(set) +
              " is not a nonempty set of agents 0.." + std::to_string(n - 1),
          "invalid-key");
    }
    if (kind == GameKind::StableSet &&
        !is_clique_of(game.graph_data().graph, set)) {
      throw MalformedInputError("satisfaction key " + set_to_string(set) +
                                    " is not a clique of the graph",
                                "invalid-key");
    }
    if (kind == GameKind::Clique &&
        !is_stable_of(game.graph_data().graph, set)) {
      throw MalformedInputError("satisfaction key " + set_to_string(set) +
                                    " is not a stable set of the graph",
                                "invalid-key");
    }
  }
}

}  // namespace

CoreReport verify_core_membership(const GameInstance& game,
                                  const Imputation& imp, int bound) {
  check_agent_bound(game.agent_count(), bound, "the core check");
  return verify_core_membership(game, imp, compute_worth_table(game, bound));
}

CoreReport verify_core_membership(const GameInstance& game,
                                  const Imputation& imp,
                                  const std::vector<Rational>& worth_table) {
  validate_imputation(game, imp);
  const int n = game.agent_count();
  const Mask full = full_mask(n);
  if (worth_table.size() != (std::size_t(1) << n)) {
    throw ContractError("the worth table must cover all 2^n coalitions");
  }
  CoreReport rep;
  rep.worth_total = worth_table[full];
  rep.satisfaction_total = imputation_total(imp);
  const auto* agent = std::get_if<AgentImputation>(&imp);
  for (Mask t = 1; t != 0 && t <= full; ++t) {
    Rational allocated;
    if (agent) {
      for (const auto& [id, value] : agent->payoffs) {
        if (contains(t, id)) allocated += value;
      }
    } else {
      allocated = satisfaction(std::get<SatisfactionImputation>(imp), t);
    }
    ++rep.coalitions_checked;
    if (allocated < worth_table[t]) {
      rep.violations.push_back({t, worth_table[t], allocated});
    }
  }
  rep.in_core =
      rep.violations.empty() && rep.worth_total == rep.satisfaction_total;
  return rep;
}

TdiReport tdi_witness(const GameInstance& game, int bound) {
  const std::vector<Rational>* weights = nullptr;
  switch (game.kind()) {
    case GameKind::Assignment:
      weights = &game.assignment_data().edge_weights;
      break;
    case GameKind::StableSet:
    case GameKind::Clique:
      weights = &game.graph_data().weights;
      break;
    case GameKind::Matroid:
      weights = &game.matroid_data().weights;
      break;
    case GameKind::GenericPacking:
      weights = &game.packing_data().weights;
      break;
  }
  for (const Rational& w : *weights) {
    if (!w.is_integer()) {
      throw ContractError(
          "the integral dual search needs integer weights; got " + w.str());
    }
  }
  GameLPs lps = build_lps(game, bound);
  const LPSolution sol = solve_lp(lps.primal);
  if (sol.status != SolveStatus::Optimal) {
    throw Error("internal", "every game relaxation is bounded and feasible");
  }
  TdiReport rep;
  rep.target = sol.value;
  rep.lp_value = sol.value;
  rep.worth_grand = worth(game, full_mask(game.agent_count()), bound);
  if (game.kind() == GameKind::StableSet || game.kind() == GameKind::Clique) {
    const Graph& g = game.graph_data().graph;
    if (g.vertex_count() <= kDefaultGraphBound) {
      rep.graph_perfect = is_perfect(g).is_perfect;
    }
  }
  const auto record = [&](const IntegralDualWitness& w) {
    rep.assignment.clear();
    for (std::size_t i = 0; i < w.assignment.size(); ++i) {
      if (w.assignment[i] != 0) {
        rep.assignment[lps.row_objects[i]] = w.assignment[i];
      }
    }
  };
  const IntegralDualWitness at_opt = find_integral_dual(lps.dual, sol.value);
  if (at_opt.found) {
    rep.found = true;
    record(at_opt);
    return rep;
  }
  // No integral dual reaches the fractional optimum; walk the integer values
  // above it for the cheapest integral cover (integral duals have integer
  // objectives here since every dual cost is an integer rank or a one).
  Rational probe = sol.value.is_integer() ? sol.value + Rational(1)
                                          : sol.value.ceil();
  for (int step = 0; step < 64; ++step, probe += Rational(1)) {
    const IntegralDualWitness w = find_integral_dual(lps.dual, probe);
    if (w.found) {
      rep.min_integral_value = probe;
      record(w);
      break;
    }
  }
  return rep;
}

}  // namespace cgcore
