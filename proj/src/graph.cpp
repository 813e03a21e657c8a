#include "graph.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace cgcore {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw MalformedInputError("negative vertex count");
  if (n > 62) {
    throw ResourceLimitError("graph on " + std::to_string(n) +
                             " vertices is beyond the supported size (62)");
  }
  adj_.assign(n_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw MalformedInputError("edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") out of range");
  }
  if (u == v) {
    throw MalformedInputError("self-loop at vertex " + std::to_string(u));
  }
  if (adjacent(u, v)) {
    throw MalformedInputError("duplicate edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
  }
  adj_[u] |= 1ULL << v;
  adj_[v] |= 1ULL << u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (Mask rest = adj_[u] & ~full_mask(u + 1); rest; rest &= rest - 1) {
      out.push_back({u, std::countr_zero(rest)});
    }
  }
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (const Mask m : adj_) total += popcount(m);
  return total / 2;
}

WeightedGraph make_weighted(Graph g, std::vector<Rational> weights) {
  if (static_cast<int>(weights.size()) != g.vertex_count()) {
    throw MalformedInputError(
        "weight vector length " + std::to_string(weights.size()) +
        " does not match " + std::to_string(g.vertex_count()) + " vertices");
  }
  for (const auto& w : weights) {
    if (w < Rational(0)) {
      throw MalformedInputError("negative vertex weight " + w.str(),
                                "negative-weight");
    }
  }
  return WeightedGraph{std::move(g), std::move(weights)};
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, Mask r, Mask p, Mask x,
                   std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P | X with the most neighbours in P.
  int pivot = -1, best = -1;
  for (Mask rest = p | x; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int cnt = popcount(p & g.neighbors(u));
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  for (Mask rest = p & ~g.neighbors(pivot); rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const Mask vx = 1ULL << v;
    bron_kerbosch(g, r | vx, p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~vx;
    x |= vx;
  }
}

// Branch-and-bound maximum clique size within `inside`.
void omega_search(const Graph& g, Mask candidates, int size, int& best) {
  if (size + popcount(candidates) <= best) return;
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    omega_search(g, candidates & g.neighbors(v), size + 1, best);
  }
}

bool colorable(const Graph& g, const std::vector<int>& verts, size_t at,
               std::vector<int>& color, int k) {
  if (at == verts.size()) return true;
  const int v = verts[at];
  int used = 0;
  for (size_t i = 0; i < at; ++i) used = std::max(used, color[i]);
  const int limit = std::min(k, used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (size_t i = 0; i < at && ok; ++i) {
      if (color[i] == c && g.adjacent(v, verts[i])) ok = false;
    }
    if (ok) {
      color[at] = c;
      if (colorable(g, verts, at + 1, color, k)) return true;
    }
  }
  color[at] = 0;
  return false;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Shared search for best-weight subsets that are stable (adjacency forbidden)
// or cliques (adjacency required): branch on the lowest remaining vertex.
struct BestSet {
  Mask set = 0;
  Rational weight;
  bool any = false;
};

void stable_search(const WeightedGraph& wg, Mask rest, Mask chosen,
                   const Rational& weight, BestSet& best) {
  Rational remaining = weight;
  for (Mask r = rest; r; r &= r - 1) {
    remaining += wg.weights[std::countr_zero(r)];
  }
  if (best.any && remaining < best.weight) return;
  if (rest == 0) {
    const bool better =
        !best.any || weight > best.weight ||
        (weight == best.weight &&
         lex_less(mask_to_vector(chosen), mask_to_vector(best.set)));
    if (better) {
      best.any = true;
      best.set = chosen;
      best.weight = weight;
    }
    return;
  }
  const int v = std::countr_zero(rest);
  const Mask vx = 1ULL << v;
  stable_search(wg, (rest & ~vx) & ~wg.graph.neighbors(v), chosen | vx,
                weight + wg.weights[v], best);
  stable_search(wg, rest & ~vx, chosen, weight, best);
}

void clique_search(const WeightedGraph& wg, Mask rest, Mask chosen,
                   const Rational& weight, BestSet& best) {
  Rational remaining = weight;
  for (Mask r = rest; r; r &= r - 1) {
    remaining += wg.weights[std::countr_zero(r)];
  }
  if (best.any && remaining < best.weight) return;
  if (rest == 0) {
    const bool better =
        !best.any || weight > best.weight ||
        (weight == best.weight &&
         lex_less(mask_to_vector(chosen), mask_to_vector(best.set)));
    if (better) {
      best.any = true;
      best.set = chosen;
      best.weight = weight;
    }
    return;
  }
  const int v = std::countr_zero(rest);
  const Mask vx = 1ULL << v;
  clique_search(wg, (rest & ~vx) & wg.graph.neighbors(v), chosen | vx,
                weight + wg.weights[v], best);
  clique_search(wg, rest & ~vx, chosen, weight, best);
}

}  // namespace

std::vector<Mask> enumerate_maximal_cliques(const Graph& g) {
  std::vector<Mask> out;
  if (g.vertex_count() == 0) return out;
  bron_kerbosch(g, 0, full_mask(g.vertex_count()), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number_within(const Graph& g, Mask inside) {
  int best = 0;
  omega_search(g, inside, 0, best);
  return best;
}

int clique_number(const Graph& g) {
  return clique_number_within(g, full_mask(g.vertex_count()));
}

int chromatic_number_within(const Graph& g, Mask inside) {
  const int count = popcount(inside);
  if (count == 0) return 0;
  // Order vertices by descending degree inside the subgraph; deterministic
  // tie-break on the id.
  std::vector<int> verts = mask_to_vector(inside);
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    return popcount(g.neighbors(a) & inside) > popcount(g.neighbors(b) & inside);
  });
  std::vector<int> color(count, 0);
  for (int k = clique_number_within(g, inside); k <= count; ++k) {
    if (colorable(g, verts, 0, color, k)) return k;
  }
  return count;
}

int chromatic_number(const Graph& g) {
  return chromatic_number_within(g, full_mask(g.vertex_count()));
}

std::pair<std::vector<int>, Rational> max_weight_stable_set(
    const WeightedGraph& wg, Mask inside) {
  BestSet best;
  stable_search(wg, inside, 0, Rational(0), best);
  return {mask_to_vector(best.set), best.weight};
}

std::pair<std::vector<int>, Rational> max_weight_clique(const WeightedGraph& wg,
                                                        Mask inside) {
  BestSet best;
  clique_search(wg, inside, 0, Rational(0), best);
  return {mask_to_vector(best.set), best.weight};
}

PerfectionReport is_perfect(const Graph& g, int bound) {
  const int n = g.vertex_count();
  if (n > bound) {
    throw ResourceLimitError(
        "perfection check on " + std::to_string(n) + " vertices exceeds the " +
        "bound " + std::to_string(bound) + "; raise the bound explicitly");
  }
  PerfectionReport rep;
  rep.is_perfect = true;
  for (Mask sub = 1; sub <= full_mask(n); ++sub) {
    const int omega = clique_number_within(g, sub);
    const int chi = chromatic_number_within(g, sub);
    if (sub == full_mask(n)) {
      rep.omega = omega;
      rep.chi = chi;
    }
    if (omega != chi && rep.is_perfect) {
      rep.is_perfect = false;
      rep.witness = mask_to_vector(sub);
    }
  }
  return rep;
}

namespace {

// Is the induced subgraph on `sub` a single chordless cycle?  Equivalent to
// every vertex having exactly two neighbours inside and the whole set being
// connected.
std::optional<std::vector<int>> induced_cycle(const Graph& g, Mask sub) {
  for (Mask rest = sub; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (popcount(g.neighbors(v) & sub) != 2) return std::nullopt;
  }
  const int start = std::countr_zero(sub);
  std::vector<int> cycle{start};
  Mask seen = 1ULL << start;
  int prev = -1, at = start;
  while (true) {
    const Mask nbrs = g.neighbors(at) & sub & ~seen;
    if (nbrs == 0) break;
    const int next = std::countr_zero(nbrs);
    cycle.push_back(next);
    seen |= 1ULL << next;
    prev = at;
    at = next;
  }
  (void)prev;
  if (static_cast<int>(cycle.size()) != popcount(sub)) return std::nullopt;
  // Close the cycle: the last vertex must see the start.
  if (!g.adjacent(cycle.back(), start)) return std::nullopt;
  return cycle;
}

std::optional<std::vector<int>> scan_holes(const Graph& g) {
  const int n = g.vertex_count();
  for (Mask sub = 1; sub <= full_mask(n); ++sub) {
    const int size = popcount(sub);
    if (size < 5 || size % 2 == 0) continue;
    if (auto cycle = induced_cycle(g, sub)) return cycle;
  }
  return std::nullopt;
}

}  // namespace

std::optional<OddCycle> find_odd_hole_or_antihole(const Graph& g, int bound) {
  const int n = g.vertex_count();
  if (n > bound) {
    throw ResourceLimitError(
        "odd-hole scan on " + std::to_string(n) + " vertices exceeds the " +
        "bound " + std::to_string(bound) + "; raise the bound explicitly");
  }
  if (auto cycle = scan_holes(g)) {
    return OddCycle{false, std::move(*cycle)};
  }
  if (auto cycle = scan_holes(complement(g))) {
    return OddCycle{true, std::move(*cycle)};
  }
  return std::nullopt;
}

}  // namespace cgcore
