#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "lp.hpp"
#include "matroid.hpp"
#include "rational.hpp"
#include "subsets.hpp"

namespace cgcore {

inline constexpr int kDefaultAgentBound = 10;

enum class GameKind { Assignment, StableSet, Clique, Matroid, GenericPacking };

std::string game_kind_name(GameKind kind);

struct AssignmentData {
  Graph graph;                         // bipartite host
  std::vector<Rational> edge_weights;  // one per Graph::edges() entry
  Mask part_u = 0;
  Mask part_v = 0;

  friend bool operator==(const AssignmentData&, const AssignmentData&) = default;
};

struct PackingData {
  int agent_count = 0;
  std::vector<std::vector<int>> matrix;  // agents x objects, 0/1 entries
  std::vector<Mask> columns;             // per-object agent support
  std::vector<Rational> weights;         // one per object

  friend bool operator==(const PackingData&, const PackingData&) = default;
};

// A cooperative game over agents 0..n-1.  Coalitions are agent masks; the
// worth of a coalition is the optimum of the game's combinatorial problem
// restricted to it (for packing, an object is usable by a coalition holding
// every agent the object touches).
class GameInstance {
 public:
  static GameInstance assignment(Graph g, std::vector<Rational> edge_weights,
                                 Mask part_u, Mask part_v);
  static GameInstance stable_set(WeightedGraph wg);
  static GameInstance clique(WeightedGraph wg);
  static GameInstance matroid(WeightedMatroid wm,
                              int bound = kDefaultMatroidBound);
  static GameInstance generic_packing(std::vector<std::vector<int>> matrix,
                                      std::vector<Rational> weights);

  GameKind kind() const { return kind_; }
  int agent_count() const;

  const AssignmentData& assignment_data() const;
  const WeightedGraph& graph_data() const;  // stable_set and clique kinds
  const WeightedMatroid& matroid_data() const;
  const PackingData& packing_data() const;

  friend bool operator==(const GameInstance& a, const GameInstance& b) {
    return a.kind_ == b.kind_ && a.data_ == b.data_;
  }

 private:
  GameInstance() = default;
  GameKind kind_ = GameKind::Assignment;
  std::variant<AssignmentData, WeightedGraph, WeightedMatroid, PackingData>
      data_;
};

// Payoffs per agent; absent agents receive zero.  Values are nonnegative.
struct AgentImputation {
  std::map<int, Rational> payoffs;

  friend bool operator==(const AgentImputation&, const AgentImputation&) =
      default;
};

// Dual value carried by object sets (cliques of the graph, stable sets for
// the clique game, element subsets for the matroid game).  Keys nonempty,
// values nonnegative.
struct SatisfactionImputation {
  std::map<Mask, Rational> support;

  friend bool operator==(const SatisfactionImputation&,
                         const SatisfactionImputation&) = default;
};

AgentImputation make_agent_imputation(std::map<int, Rational> payoffs);
SatisfactionImputation make_satisfaction_imputation(
    std::map<Mask, Rational> support);

using Imputation = std::variant<AgentImputation, SatisfactionImputation>;

Rational imputation_total(const Imputation& imp);

struct Allocation {
  std::map<Mask, Rational> sub_support;
  Rational total;
};

// Trickle y down to the coalition: every supported set passes its value to
// its intersection with T; sets missing T entirely allocate nothing.
Allocation allocate_top_down(const SatisfactionImputation& y, Mask coalition);

// Total the coalition receives under top-down allocation: the sum of y over
// sets meeting T.
Rational satisfaction(const SatisfactionImputation& y, Mask coalition);

struct CoreViolation {
  Mask coalition = 0;
  Rational worth;
  Rational allocated;

  friend bool operator==(const CoreViolation&, const CoreViolation&) = default;
};

struct CoreReport {
  bool in_core = false;
  Rational worth_total;
  Rational satisfaction_total;
  std::vector<CoreViolation> violations;  // ascending by coalition mask
  long long coalitions_checked = 0;
};

struct GameLPs {
  LinearProgram primal;
  LinearProgram dual;
  std::vector<Mask> row_objects;  // per primal row (= dual variable)
  std::vector<Mask> col_objects;  // per primal variable
};

// The packing relaxation and its covering dual for the game's kind:
// assignment rows per matched vertex, stable-set rows per maximal clique
// (clique game: of the complement), matroid rows per nonempty element subset
// (refused above `bound`), packing rows per touched agent.
GameLPs build_lps(const GameInstance& game, int bound = kDefaultAgentBound);

Rational worth(const GameInstance& game, Mask coalition,
               int bound = kDefaultAgentBound);

// worth for every coalition mask, indexed 0..2^n-1.
std::vector<Rational> compute_worth_table(const GameInstance& game,
                                          int bound = kDefaultAgentBound);

struct DualCoreSolution {
  Imputation imputation;
  LPSolution primal_solution;  // duals of the primal rows included
  GameLPs lps;
  Rational lp_value;
  Rational worth_grand;
  bool lp_matches_worth = false;  // the per-instance integrality hypothesis
  bool primal_integral = false;   // the returned vertex is 0/1
};

// Solve the game's LP exactly and package the optimal dual as the kind's
// imputation: agent payoffs for assignment/packing, clique satisfaction for
// stable-set/clique, and rank-scaled set satisfaction r(S) * y_S for the
// matroid game (the worth a dual cover concedes to S, which is what the
// core's set-wise accounting totals).
DualCoreSolution solve_dual_core(const GameInstance& game,
                                 int bound = kDefaultAgentBound);

// Exhaustive core check: condition 1 at the grand coalition (total equals
// worth exactly) and condition 2 for every nonempty coalition, bottom-up for
// agent imputations and top-down for satisfaction imputations.
CoreReport verify_core_membership(const GameInstance& game,
                                  const Imputation& imp,
                                  int bound = kDefaultAgentBound);
CoreReport verify_core_membership(const GameInstance& game,
                                  const Imputation& imp,
                                  const std::vector<Rational>& worth_table);

struct TdiReport {
  bool found = false;
  std::map<Mask, long long> assignment;  // dual object -> integral value
  Rational target;                       // the LP optimum aimed for
  Rational lp_value;
  Rational worth_grand;
  std::optional<bool> graph_perfect;  // stable-set/clique kinds, within bounds
  std::optional<Rational> min_integral_value;  // when missed at the optimum
};

// Branch-and-bound search for an integral optimal dual at the LP optimum.
// Requires integral weights.  When no witness exists at the optimum (the
// system is not TDI there), also reports the smallest integral dual value.
TdiReport tdi_witness(const GameInstance& game, int bound = kDefaultAgentBound);

// The dual-optimality predicate audited against brute-force core membership:
// the imputation, read as a dual vector, is feasible for the game's dual LP
// and its objective equals `lp_value`.  For the matroid game the stored
// values s_S are divided back to y_S = s_S / r(S); positive mass on a
// rank-zero set has no dual preimage, and constraints of rank-zero elements
// are skipped since free mass on rank-zero sets covers them at no cost.
bool dual_optimality_predicate(const GameInstance& game, const Imputation& imp,
                               const Rational& lp_value);

struct AuditSample {
  long long index = 0;
  Imputation imputation;
  bool in_core = false;
  bool dual_optimal = false;
};

struct AuditReport {
  long long trials = 0;
  std::uint64_t seed = 0;
  Rational worth_grand;
  Rational lp_value;
  bool hypothesis_holds = false;  // LP optimum == worth at the grand coalition
  bool two_sided = false;         // equivalence expected in both directions
  bool forward_required = false;
  bool forward_ok = false;  // the solver's own dual passes the core check
  long long agree_count = 0;
  long long converse_gap_count = 0;    // matroid: in core, no dual preimage
  long long hypothesis_gap_count = 0;  // excused by a failed hypothesis
  std::vector<AuditSample> counterexamples;
  bool ok = false;
};

// Sample `trials` imputations normalized to the grand worth and test that
// brute-force core membership agrees with exact dual optimality wherever the
// kind's theorem promises it; also check the solver's own dual forward.
// Disagreements outside the promised scope are tallied as documented gaps,
// inside it as counterexamples (ok = false).
AuditReport equivalence_audit(const GameInstance& game, long long trials,
                              std::uint64_t seed,
                              int bound = kDefaultAgentBound);

}  // namespace cgcore
