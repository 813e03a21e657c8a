#include <utility>

#include "errors.hpp"
#include "game.hpp"
#include "rng.hpp"

namespace cgcore {

namespace {

Rational payoff_of(const AgentImputation& imp, int agent) {
  const auto it = imp.payoffs.find(agent);
  return it == imp.payoffs.end() ? Rational(0) : it->second;
}

const AgentImputation& as_agent(const Imputation& imp) {
  if (const auto* p = std::get_if<AgentImputation>(&imp)) return *p;
  throw ContractError("this game kind pairs with an agent imputation");
}

const SatisfactionImputation& as_satisfaction(const Imputation& imp) {
  if (const auto* p = std::get_if<SatisfactionImputation>(&imp)) return *p;
  throw ContractError("this game kind pairs with a satisfaction imputation");
}

bool clique_key(const Graph& g, Mask set) {
  const auto verts = mask_to_vector(set);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

bool stable_key(const Graph& g, Mask set) {
  const auto verts = mask_to_vector(set);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

}  // namespace

bool dual_optimality_predicate(const GameInstance& game, const Imputation& imp,
                               const Rational& lp_value) {
  const int n = game.agent_count();
  const Mask full = full_mask(n);
  if (imputation_total(imp) != lp_value) return false;
  switch (game.kind()) {
    case GameKind::Assignment: {
      const AgentImputation& x = as_agent(imp);
      for (const auto& [agent, value] : x.payoffs) {
        if (agent < 0 || agent >= n) return false;
      }
      const AssignmentData& a = game.assignment_data();
      const auto edges = a.graph.edges();
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (payoff_of(x, edges[j].first) + payoff_of(x, edges[j].second) <
            a.edge_weights[j]) {
          return false;
        }
      }
      return true;
    }
    case GameKind::GenericPacking: {
      const AgentImputation& x = as_agent(imp);
      for (const auto& [agent, value] : x.payoffs) {
        if (agent < 0 || agent >= n) return false;
      }
      const PackingData& p = game.packing_data();
      for (std::size_t j = 0; j < p.columns.size(); ++j) {
        Rational covered;
        for (int i : mask_to_vector(p.columns[j])) {
          covered += payoff_of(x, i);
        }
        if (covered < p.weights[j]) return false;
      }
      return true;
    }
    case GameKind::StableSet:
    case GameKind::Clique: {
      const SatisfactionImputation& y = as_satisfaction(imp);
      const WeightedGraph& wg = game.graph_data();
      for (const auto& [set, value] : y.support) {
        if (set == 0 || (set & ~full) != 0) return false;
        const bool valid = game.kind() == GameKind::StableSet
                               ? clique_key(wg.graph, set)
                               : stable_key(wg.graph, set);
        if (!valid) return false;
      }
      for (int v = 0; v < n; ++v) {
        Rational covered;
        for (const auto& [set, value] : y.support) {
          if (contains(set, v)) covered += value;
        }
        if (covered < wg.weights[v]) return false;
      }
      return true;
    }
    case GameKind::Matroid: {
      const SatisfactionImputation& s = as_satisfaction(imp);
      const Matroid& m = game.matroid_data().matroid;
      for (const auto& [set, value] : s.support) {
        if (set == 0 || (set & ~full) != 0) return false;
        // Mass on a rank-zero set has no dual preimage.
        if (m.rank(set) == 0 && !value.is_zero()) return false;
      }
      for (int e = 0; e < n; ++e) {
        if (m.rank(1ULL << e) == 0) continue;  // loops are covered for free
        Rational covered;
        for (const auto& [set, value] : s.support) {
          if (contains(set, e) && m.rank(set) > 0) {
            covered += value / Rational(m.rank(set));
          }
        }
        if (covered < game.matroid_data().weights[e]) return false;
      }
      return true;
    }
  }
  throw ContractError("unknown game kind");
}

namespace {

Rational small_value(Rng& rng) {
  return Rational(rng.uniform(0, 8), rng.uniform(1, 2));
}

void rescale_to(std::map<int, Rational>& payoffs, const Rational& target) {
  Rational total;
  for (const auto& [id, value] : payoffs) total += value;
  if (total.is_zero()) {
    if (payoffs.empty()) return;
    payoffs.begin()->second = Rational(1);
    total = Rational(1);
  }
  const Rational scale = target / total;
  for (auto& [id, value] : payoffs) value = value * scale;
}

void rescale_to(std::map<Mask, Rational>& support, const Rational& target) {
  Rational total;
  for (const auto& [set, value] : support) total += value;
  if (total.is_zero()) {
    if (support.empty()) return;
    support.begin()->second = Rational(1);
    total = Rational(1);
  }
  const Rational scale = target / total;
  for (auto& [set, value] : support) value = value * scale;
}

Imputation sample_agents(Rng& rng, int n, const Rational& target) {
  AgentImputation imp;
  for (int i = 0; i < n; ++i) {
    imp.payoffs[i] = Rational(rng.uniform(0, 10), rng.uniform(1, 3));
  }
  rescale_to(imp.payoffs, target);
  return imp;
}

Imputation sample_from_pool(Rng& rng, const std::vector<Mask>& pool,
                            const Rational& target) {
  SatisfactionImputation imp;
  if (pool.empty()) return imp;
  for (Mask q : pool) {
    if (rng.chance(1, 2)) imp.support[q] = small_value(rng);
  }
  if (imp.support.empty()) {
    imp.support[pool[rng.below(pool.size())]] = small_value(rng);
  }
  rescale_to(imp.support, target);
  return imp;
}

Imputation sample_subsets(Rng& rng, int n, const Rational& target) {
  SatisfactionImputation imp;
  if (n == 0) return imp;
  const Mask full = full_mask(n);
  const long long count = rng.uniform(1, 4);
  for (long long k = 0; k < count; ++k) {
    Mask set = rng.next_u64() & full;
    if (set == 0) set = full;
    imp.support[set] += small_value(rng);
  }
  rescale_to(imp.support, target);
  return imp;
}

}  // namespace

AuditReport equivalence_audit(const GameInstance& game, long long trials,
                              std::uint64_t seed, int bound) {
  if (trials < 0) throw ContractError("trials must be nonnegative");
  AuditReport rep;
  rep.trials = trials;
  rep.seed = seed;
  const std::vector<Rational> table = compute_worth_table(game, bound);
  const DualCoreSolution solved = solve_dual_core(game, bound);
  rep.worth_grand = solved.worth_grand;
  rep.lp_value = solved.lp_value;
  rep.hypothesis_holds = solved.lp_matches_worth;
  const GameKind kind = game.kind();
  rep.two_sided = kind == GameKind::Assignment ||
                  (kind != GameKind::Matroid && rep.hypothesis_holds);
  rep.forward_required = kind == GameKind::Assignment ||
                         kind == GameKind::Matroid || rep.hypothesis_holds;
  rep.forward_ok =
      verify_core_membership(game, solved.imputation, table).in_core;

  std::vector<Mask> pool;
  if (kind == GameKind::StableSet || kind == GameKind::Clique) {
    const Graph& g = game.graph_data().graph;
    const Graph host = kind == GameKind::Clique ? complement(g) : g;
    for (Mask q : enumerate_maximal_cliques(host)) {
      if (q != 0) pool.push_back(q);
    }
  }

  Rng rng(seed);
  const int n = game.agent_count();
  for (long long i = 0; i < trials; ++i) {
    Imputation imp;
    switch (kind) {
      case GameKind::Assignment:
      case GameKind::GenericPacking:
        imp = sample_agents(rng, n, rep.worth_grand);
        break;
      case GameKind::StableSet:
      case GameKind::Clique:
        imp = sample_from_pool(rng, pool, rep.worth_grand);
        break;
      case GameKind::Matroid:
        imp = sample_subsets(rng, n, rep.worth_grand);
        break;
    }
    const bool in_core = verify_core_membership(game, imp, table).in_core;
    const bool dual_opt = dual_optimality_predicate(game, imp, rep.lp_value);
    if (in_core == dual_opt) {
      ++rep.agree_count;
      continue;
    }
    if (kind == GameKind::Matroid) {
      if (in_core && !dual_opt) {
        ++rep.converse_gap_count;
      } else {
        rep.counterexamples.push_back({i, imp, in_core, dual_opt});
      }
    } else if (rep.two_sided) {
      rep.counterexamples.push_back({i, imp, in_core, dual_opt});
    } else {
      ++rep.hypothesis_gap_count;
    }
  }
  rep.ok = rep.counterexamples.empty() &&
           (!rep.forward_required || rep.forward_ok);
  return rep;
}

}  // namespace cgcore
