#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"
#include "subsets.hpp"

namespace cgcore {

inline constexpr int kDefaultMatroidBound = 10;

enum class MatroidKind { Uniform, Graphic, Partition, Explicit };

std::string matroid_kind_name(MatroidKind kind);

struct AxiomReport {
  bool ok = false;
  std::string check;   // failing axiom ("downward-closure", "submodularity", ...)
  std::string detail;  // e.g. "{0} missing"
};

// Matroid over elements 0..n-1 with a closed-form rank oracle per kind.
// Immutable after construction; rank queries are pure.  Axiom verification
// memoizes into a cache shared by copies.
class Matroid {
 public:
  static Matroid uniform(int n, int k);
  // Elements are the host's edges, numbered in Graph::edges() order.
  static Matroid graphic(Graph host);
  // `blocks` must partition 0..n-1; one capacity per block.
  static Matroid partition(std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities);
  static Matroid explicit_sets(int n, std::vector<Mask> independent);

  MatroidKind kind() const { return kind_; }
  int element_count() const { return n_; }
  int rank(Mask s) const;
  int full_rank() const { return rank(full_mask(n_)); }
  bool independent(Mask s) const { return rank(s) == popcount(s); }

  int uniform_k() const;
  const Graph& host_graph() const;
  const std::vector<std::pair<int, int>>& host_edges() const;
  const std::vector<std::vector<int>>& blocks() const;
  const std::vector<int>& capacities() const;
  const std::vector<Mask>& independent_sets() const;

  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  Matroid() = default;
  friend const AxiomReport& verify_rank_axioms(const Matroid& m, int bound);

  MatroidKind kind_ = MatroidKind::Uniform;
  int n_ = 0;
  int k_ = 0;                                   // uniform
  Graph host_;                                  // graphic
  std::vector<std::pair<int, int>> edges_;      // graphic
  std::vector<std::vector<int>> blocks_;        // partition
  std::vector<int> capacities_;                 // partition
  std::vector<Mask> block_masks_;               // partition
  std::vector<Mask> independent_;               // explicit, sorted
  mutable std::shared_ptr<AxiomReport> axiom_cache_;
};

struct WeightedMatroid {
  Matroid matroid;
  std::vector<Rational> weights;  // one nonnegative weight per element

  friend bool operator==(const WeightedMatroid& a, const WeightedMatroid& b) {
    return a.matroid == b.matroid && a.weights == b.weights;
  }
};

WeightedMatroid make_weighted(Matroid m, std::vector<Rational> weights);

// Exhaustive axiom check: rank(empty) = 0, 0 <= rank(S) <= |S|, monotone,
// unit increase, submodular over all subset pairs; for the explicit kind the
// independence list is first checked for downward closure and exchange.
// Reports the first violation in that scan order.  Refuses ground sets above
// `bound`; the result is cached on the matroid.
const AxiomReport& verify_rank_axioms(const Matroid& m,
                                      int bound = kDefaultMatroidBound);

// The classic greedy loop: elements of `inside` sorted by decreasing weight
// (ties by ascending index); pick each iff the rank strictly increases.
// Verifies the rank axioms first unless `waive_axioms`.
std::pair<std::vector<int>, Rational> greedy_max_weight_independent(
    const WeightedMatroid& wm, Mask inside, bool waive_axioms = false,
    int bound = kDefaultMatroidBound);
std::pair<std::vector<int>, Rational> greedy_max_weight_independent(
    const WeightedMatroid& wm);

// Exhaustive maximum over independent subsets of `inside`; weight ties
// resolve to the lexicographically smallest element set.
std::pair<std::vector<int>, Rational> brute_force_max_weight_independent(
    const WeightedMatroid& wm, Mask inside, int bound = kDefaultMatroidBound);
std::pair<std::vector<int>, Rational> brute_force_max_weight_independent(
    const WeightedMatroid& wm);

}  // namespace cgcore
