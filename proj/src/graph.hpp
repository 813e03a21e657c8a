#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "subsets.hpp"

namespace cgcore {

inline constexpr int kDefaultGraphBound = 12;

// Simple undirected graph on vertices 0..n-1.  No loops, no multi-edges;
// adjacency is kept as bitmasks, which caps the vertex count at 62 (far
// beyond the exhaustive bounds used here).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  Mask neighbors(int v) const { return adj_[v]; }
  void add_edge(int u, int v);

  // Edges as (min, max) pairs in ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

struct WeightedGraph {
  Graph graph;
  std::vector<Rational> weights;  // one nonnegative weight per vertex

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.graph == b.graph && a.weights == b.weights;
  }
};

WeightedGraph make_weighted(Graph g, std::vector<Rational> weights);

Graph complement(const Graph& g);

// All maximal cliques, via Bron-Kerbosch with pivoting, returned as vertex
// masks in ascending mask order.
std::vector<Mask> enumerate_maximal_cliques(const Graph& g);

int clique_number(const Graph& g);
int clique_number_within(const Graph& g, Mask inside);
int chromatic_number(const Graph& g);
int chromatic_number_within(const Graph& g, Mask inside);

// Exact maximum-weight stable set (resp. clique) among the vertices of
// `inside`; ties on weight resolve to the lexicographically smallest vertex
// set.  Returns the set and its weight.
std::pair<std::vector<int>, Rational> max_weight_stable_set(
    const WeightedGraph& wg, Mask inside);
std::pair<std::vector<int>, Rational> max_weight_clique(const WeightedGraph& wg,
                                                        Mask inside);

struct PerfectionReport {
  bool is_perfect = false;
  int omega = 0;  // of the whole graph
  int chi = 0;
  std::optional<std::vector<int>> witness;  // first induced subgraph (by
                                            // ascending subset mask) with
                                            // omega != chi
};

// Perfection by definition: checks omega = chi on every nonempty induced
// subgraph.  Exponential; refuses graphs above `bound` vertices.
PerfectionReport is_perfect(const Graph& g, int bound = kDefaultGraphBound);

struct OddCycle {
  bool antihole = false;   // found in the complement
  std::vector<int> vertices;  // cycle order, starting at its smallest vertex
};

// First chordless odd cycle of length >= 5 in g (then in complement(g)),
// scanning vertex subsets in ascending mask order.
std::optional<OddCycle> find_odd_hole_or_antihole(
    const Graph& g, int bound = kDefaultGraphBound);

}  // namespace cgcore
