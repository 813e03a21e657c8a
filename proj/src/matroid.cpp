#include "matroid.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace cgcore {

namespace {

void check_ground_size(int n) {
  if (n < 0) throw MalformedInputError("negative element count");
  if (n > 62) {
    throw ResourceLimitError("matroid on " + std::to_string(n) +
                             " elements is beyond the supported size (62)");
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string matroid_kind_name(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::Uniform: return "uniform";
    case MatroidKind::Graphic: return "graphic";
    case MatroidKind::Partition: return "partition";
    case MatroidKind::Explicit: return "explicit";
  }
  throw ContractError("unknown matroid kind");
}

Matroid Matroid::uniform(int n, int k) {
  check_ground_size(n);
  if (k < 0) throw MalformedInputError("negative uniform rank bound");
  Matroid m;
  m.kind_ = MatroidKind::Uniform;
  m.n_ = n;
  m.k_ = k;
  return m;
}

Matroid Matroid::graphic(Graph host) {
  Matroid m;
  m.kind_ = MatroidKind::Graphic;
  m.edges_ = host.edges();
  m.host_ = std::move(host);
  check_ground_size(static_cast<int>(m.edges_.size()));
  m.n_ = static_cast<int>(m.edges_.size());
  return m;
}

Matroid Matroid::partition(std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities) {
  if (blocks.size() != capacities.size()) {
    throw MalformedInputError("need one capacity per block, got " +
                              std::to_string(capacities.size()) + " for " +
                              std::to_string(blocks.size()) + " blocks");
  }
  for (const int c : capacities) {
    if (c < 0) throw MalformedInputError("negative block capacity");
  }
  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  check_ground_size(n);
  Matroid m;
  m.kind_ = MatroidKind::Partition;
  m.n_ = n;
  Mask seen = 0;
  for (const auto& block : blocks) {
    Mask bm = 0;
    for (const int e : block) {
      if (e < 0 || e >= n) {
        throw MalformedInputError("block element " + std::to_string(e) +
                                  " outside 0.." + std::to_string(n - 1));
      }
      if (contains(seen, e)) {
        throw MalformedInputError("element " + std::to_string(e) +
                                  " appears in two blocks");
      }
      seen |= 1ULL << e;
      bm |= 1ULL << e;
    }
    m.block_masks_.push_back(bm);
  }
  m.blocks_ = std::move(blocks);
  m.capacities_ = std::move(capacities);
  return m;
}

Matroid Matroid::explicit_sets(int n, std::vector<Mask> independent) {
  check_ground_size(n);
  for (const Mask s : independent) {
    if (s & ~full_mask(n)) {
      throw MalformedInputError("independent set " + set_to_string(s) +
                                " has elements outside 0.." +
                                std::to_string(n - 1));
    }
  }
  std::sort(independent.begin(), independent.end());
  independent.erase(std::unique(independent.begin(), independent.end()),
                    independent.end());
  Matroid m;
  m.kind_ = MatroidKind::Explicit;
  m.n_ = n;
  m.independent_ = std::move(independent);
  return m;
}

int Matroid::rank(Mask s) const {
  if (s & ~full_mask(n_)) {
    throw MalformedInputError("subset " + set_to_string(s) +
                              " has elements outside the ground set");
  }
  switch (kind_) {
    case MatroidKind::Uniform:
      return std::min(popcount(s), k_);
    case MatroidKind::Graphic: {
      UnionFind uf(host_.vertex_count());
      int r = 0;
      for (Mask rest = s; rest; rest &= rest - 1) {
        const auto& [u, v] = edges_[std::countr_zero(rest)];
        if (uf.unite(u, v)) ++r;
      }
      return r;
    }
    case MatroidKind::Partition: {
      int r = 0;
      for (size_t b = 0; b < block_masks_.size(); ++b) {
        r += std::min(popcount(s & block_masks_[b]), capacities_[b]);
      }
      return r;
    }
    case MatroidKind::Explicit: {
      int r = 0;
      for (const Mask i : independent_) {
        if ((i & ~s) == 0) r = std::max(r, popcount(i));
      }
      return r;
    }
  }
  throw ContractError("unknown matroid kind");
}

int Matroid::uniform_k() const {
  if (kind_ != MatroidKind::Uniform) throw ContractError("not a uniform matroid");
  return k_;
}

const Graph& Matroid::host_graph() const {
  if (kind_ != MatroidKind::Graphic) throw ContractError("not a graphic matroid");
  return host_;
}

const std::vector<std::pair<int, int>>& Matroid::host_edges() const {
  if (kind_ != MatroidKind::Graphic) throw ContractError("not a graphic matroid");
  return edges_;
}

const std::vector<std::vector<int>>& Matroid::blocks() const {
  if (kind_ != MatroidKind::Partition) {
    throw ContractError("not a partition matroid");
  }
  return blocks_;
}

const std::vector<int>& Matroid::capacities() const {
  if (kind_ != MatroidKind::Partition) {
    throw ContractError("not a partition matroid");
  }
  return capacities_;
}

const std::vector<Mask>& Matroid::independent_sets() const {
  if (kind_ != MatroidKind::Explicit) {
    throw ContractError("not an explicit matroid");
  }
  return independent_;
}

bool operator==(const Matroid& a, const Matroid& b) {
  if (a.kind_ != b.kind_ || a.n_ != b.n_) return false;
  switch (a.kind_) {
    case MatroidKind::Uniform: return a.k_ == b.k_;
    case MatroidKind::Graphic: return a.host_ == b.host_;
    case MatroidKind::Partition:
      return a.blocks_ == b.blocks_ && a.capacities_ == b.capacities_;
    case MatroidKind::Explicit: return a.independent_ == b.independent_;
  }
  return false;
}

WeightedMatroid make_weighted(Matroid m, std::vector<Rational> weights) {
  if (static_cast<int>(weights.size()) != m.element_count()) {
    throw MalformedInputError(
        "weight vector length " + std::to_string(weights.size()) +
        " does not match " + std::to_string(m.element_count()) + " elements");
  }
  for (const auto& w : weights) {
    if (w < Rational(0)) {
      throw MalformedInputError("negative element weight " + w.str(),
                                "negative-weight");
    }
  }
  return WeightedMatroid{std::move(m), std::move(weights)};
}

namespace {

AxiomReport check_explicit_list(const std::vector<Mask>& list) {
  if (list.empty()) {
    return {false, "empty-list", "the empty set must be independent"};
  }
  const auto listed = [&](Mask s) {
    return std::binary_search(list.begin(), list.end(), s);
  };
  for (const Mask i : list) {
    // Drop the highest element first so missing children surface in
    // ascending order.
    const auto elems = mask_to_vector(i);
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
      const Mask without = i & ~(1ULL << *it);
      if (!listed(without)) {
        return {false, "downward-closure", set_to_string(without) + " missing"};
      }
    }
  }
  for (const Mask i : list) {
    for (const Mask j : list) {
      if (popcount(i) >= popcount(j)) continue;
      bool extended = false;
      for (Mask rest = j & ~i; rest && !extended; rest &= rest - 1) {
        if (listed(i | (rest & -rest))) extended = true;
      }
      if (!extended) {
        return {false, "exchange", "no element of " + set_to_string(j) +
                                       " extends " + set_to_string(i)};
      }
    }
  }
  return {true, "", ""};
}

AxiomReport compute_axioms(const Matroid& m) {
  if (m.kind() == MatroidKind::Explicit) {
    AxiomReport structural = check_explicit_list(m.independent_sets());
    if (!structural.ok) return structural;
  }
  const int n = m.element_count();
  const Mask all = full_mask(n);
  std::vector<int> r(static_cast<size_t>(all) + 1);
  for (Mask s = 0; s <= all; ++s) {
    r[s] = m.rank(s);
    if (s == all) break;
  }
  if (r[0] != 0) {
    return {false, "empty-rank",
            "rank of the empty set is " + std::to_string(r[0])};
  }
  for (Mask s = 1; s <= all && all != 0; ++s) {
    if (r[s] < 0 || r[s] > popcount(s)) {
      return {false, "bounds", "rank(" + set_to_string(s) + ") = " +
                                   std::to_string(r[s]) + " outside 0.." +
                                   std::to_string(popcount(s))};
    }
  }
  for (Mask t = 1; t <= all && all != 0; ++t) {
    for (Mask s = (t - 1) & t;; s = (s - 1) & t) {
      if (r[s] > r[t]) {
        return {false, "monotonicity",
                "rank(" + set_to_string(s) + ") > rank(" + set_to_string(t) +
                    ")"};
      }
      if (s == 0) break;
    }
  }
  for (Mask s = 0; s <= all; ++s) {
    for (Mask rest = all & ~s; rest; rest &= rest - 1) {
      const Mask e = rest & -rest;
      if (r[s | e] > r[s] + 1) {
        return {false, "unit-increase",
                "rank jumps by " + std::to_string(r[s | e] - r[s]) + " at " +
                    set_to_string(s) + " + " + set_to_string(e)};
      }
    }
    if (s == all) break;
  }
  for (Mask s = 0; s <= all; ++s) {
    for (Mask t = 0; t <= all; ++t) {
      if (r[s | t] + r[s & t] > r[s] + r[t]) {
        return {false, "submodularity",
                "violated at " + set_to_string(s) + ", " + set_to_string(t)};
      }
      if (t == all) break;
    }
    if (s == all) break;
  }
  return {true, "", ""};
}

}  // namespace

const AxiomReport& verify_rank_axioms(const Matroid& m, int bound) {
  if (m.axiom_cache_) return *m.axiom_cache_;
  if (m.element_count() > bound) {
    throw ResourceLimitError(
        "axiom check on " + std::to_string(m.element_count()) +
        " elements exceeds the bound " + std::to_string(bound) +
        "; raise the bound explicitly");
  }
  m.axiom_cache_ = std::make_shared<AxiomReport>(compute_axioms(m));
  return *m.axiom_cache_;
}

std::pair<std::vector<int>, Rational> greedy_max_weight_independent(
    const WeightedMatroid& wm, Mask inside, bool waive_axioms, int bound) {
  if (inside & ~full_mask(wm.matroid.element_count())) {
    throw MalformedInputError("subset " + set_to_string(inside) +
                              " has elements outside the ground set");
  }
  if (!waive_axioms) {
    const AxiomReport& rep = verify_rank_axioms(wm.matroid, bound);
    if (!rep.ok) {
      throw ContractError("matroid fails axiom " + rep.check + ": " +
                          rep.detail);
    }
  }
  std::vector<int> order = mask_to_vector(inside);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return wm.weights[a] > wm.weights[b];
  });
  Mask chosen = 0;
  int rank_now = 0;
  Rational total(0);
  for (const int e : order) {
    const int with = wm.matroid.rank(chosen | (1ULL << e));
    if (with > rank_now) {
      chosen |= 1ULL << e;
      rank_now = with;
      total += wm.weights[e];
    }
  }
  return {mask_to_vector(chosen), total};
}

std::pair<std::vector<int>, Rational> greedy_max_weight_independent(
    const WeightedMatroid& wm) {
  return greedy_max_weight_independent(
      wm, full_mask(wm.matroid.element_count()));
}

std::pair<std::vector<int>, Rational> brute_force_max_weight_independent(
    const WeightedMatroid& wm, Mask inside, int bound) {
  const int n = wm.matroid.element_count();
  if (n > bound) {
    throw ResourceLimitError(
        "exhaustive search on " + std::to_string(n) +
        " elements exceeds the bound " + std::to_string(bound) +
        "; raise the bound explicitly");
  }
  if (inside & ~full_mask(n)) {
    throw MalformedInputError("subset " + set_to_string(inside) +
                              " has elements outside the ground set");
  }
  Mask best = 0;
  Rational best_weight(0);
  for (Mask s = 0;; s = (s - inside) & inside) {
    if (wm.matroid.independent(s)) {
      Rational total(0);
      for (Mask rest = s; rest; rest &= rest - 1) {
        total += wm.weights[std::countr_zero(rest)];
      }
      if (total > best_weight ||
          (total == best_weight &&
           lex_less(mask_to_vector(s), mask_to_vector(best)))) {
        best = s;
        best_weight = total;
      }
    }
    if (s == inside) break;
  }
  return {mask_to_vector(best), best_weight};
}

std::pair<std::vector<int>, Rational> brute_force_max_weight_independent(
    const WeightedMatroid& wm) {
  return brute_force_max_weight_independent(
      wm, full_mask(wm.matroid.element_count()));
}

}  // namespace cgcore
