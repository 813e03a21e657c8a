#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "errors.hpp"
#include "matroid.hpp"
#include "rng.hpp"
#include "support.hpp"

using namespace cgcore;

namespace {

Graph triangle() {
  return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
}

std::vector<Mask> materialize_independent(const Matroid& m) {
  std::vector<Mask> out;
  const Mask all = full_mask(m.element_count());
  for (Mask s = 0;; s = (s - all) & all) {
    if (m.independent(s)) out.push_back(s);
    if (s == all) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matroid random_matroid(Rng& rng) {
  switch (rng.below(4)) {
    case 0: {
      const int n = static_cast<int>(rng.uniform(0, 8));
      return Matroid::uniform(n, static_cast<int>(rng.uniform(0, n)));
    }
    case 1: {
      const int v = static_cast<int>(rng.uniform(2, 5));
      Graph host(v);
      for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
          if (rng.chance(2, 5)) host.add_edge(a, b);
        }
      }
      return Matroid::graphic(std::move(host));
    }
    case 2: {
      const int n = static_cast<int>(rng.uniform(1, 7));
      const int b = static_cast<int>(rng.uniform(1, 3));
      std::vector<std::vector<int>> blocks(b);
      for (int e = 0; e < n; ++e) {
        blocks[rng.below(static_cast<std::uint64_t>(b))].push_back(e);
      }
      std::vector<int> caps;
      for (int i = 0; i < b; ++i) {
        caps.push_back(static_cast<int>(rng.uniform(0, 2)));
      }
      return Matroid::partition(std::move(blocks), std::move(caps));
    }
    default: {
      // A genuine matroid materialized into an explicit list.
      const int n = static_cast<int>(rng.uniform(0, 6));
      const Matroid base = Matroid::uniform(n, static_cast<int>(rng.uniform(0, n)));
      return Matroid::explicit_sets(n, materialize_independent(base));
    }
  }
}

std::vector<Rational> random_weights(Rng& rng, int n) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) {
    w.push_back(Rational(rng.uniform(0, 10), rng.uniform(1, 3)));
  }
  return w;
}

}  // namespace

TEST_CASE("rank oracles of the four kinds") {
  const Matroid u = Matroid::uniform(3, 2);
  CHECK(u.rank(0b001) == 1);
  CHECK(u.rank(0b111) == 2);
  CHECK(u.rank(0) == 0);
  CHECK(u.full_rank() == 2);
  CHECK(u.independent(0b011));
  CHECK(!u.independent(0b111));
  CHECK(u.uniform_k() == 2);
  CHECK_THROWS_AS(u.rank(0b1000), MalformedInputError);
  CHECK_THROWS_AS(u.host_graph(), ContractError);

  const Matroid g = Matroid::graphic(triangle());
  CHECK(g.element_count() == 3);
  CHECK(g.rank(0b111) == 2);
  CHECK(g.rank(0b011) == 2);
  CHECK(g.rank(0b100) == 1);
  CHECK(g.independent(0b101));
  CHECK(!g.independent(0b111));
  CHECK(g.host_edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  const Matroid p = Matroid::partition({{0, 1}, {2}}, {1, 1});
  CHECK(p.element_count() == 3);
  CHECK(p.rank(0b011) == 1);
  CHECK(p.rank(0b101) == 2);
  CHECK(p.full_rank() == 2);

  const Matroid e = Matroid::explicit_sets(2, {0b00, 0b01, 0b10});
  CHECK(e.rank(0b11) == 1);
  CHECK(e.rank(0b10) == 1);
  CHECK(e.independent(0b01));
  CHECK(!e.independent(0b11));
  CHECK(e.independent_sets() == std::vector<Mask>{0b00, 0b01, 0b10});
}

TEST_CASE("construction and weighting are validated") {
  CHECK_THROWS_AS(Matroid::uniform(-1, 0), MalformedInputError);
  CHECK_THROWS_AS(Matroid::uniform(2, -1), MalformedInputError);
  CHECK_THROWS_AS(Matroid::uniform(63, 1), ResourceLimitError);
  CHECK_THROWS_AS(Matroid::partition({{0}}, {1, 1}), MalformedInputError);
  CHECK_THROWS_AS(Matroid::partition({{0}, {0}}, {1, 1}), MalformedInputError);
  CHECK_THROWS_AS(Matroid::partition({{0, 2}}, {1}), MalformedInputError);
  CHECK_THROWS_AS(Matroid::partition({{0}}, {-1}), MalformedInputError);
  CHECK_THROWS_AS(Matroid::explicit_sets(1, {0b10}), MalformedInputError);
  // A complete graph on 12 vertices carries 66 edges, past the 62-element cap.
  Graph k12(12);
  for (int a = 0; a < 12; ++a) {
    for (int b = a + 1; b < 12; ++b) k12.add_edge(a, b);
  }
  CHECK_THROWS_AS(Matroid::graphic(k12), ResourceLimitError);

  CHECK_THROWS_AS(make_weighted(Matroid::uniform(2, 1), {Rational(1)}),
                  MalformedInputError);
  CHECK_THROWS_AS(make_weighted(Matroid::uniform(1, 1), {Rational(-1)}),
                  MalformedInputError);

  CHECK(Matroid::uniform(3, 2) == Matroid::uniform(3, 2));
  CHECK(!(Matroid::uniform(3, 2) == Matroid::uniform(3, 1)));
  CHECK(!(Matroid::uniform(3, 2) == Matroid::graphic(triangle())));
}

TEST_CASE("axiom verification accepts matroids and pinpoints violations") {
  CHECK(verify_rank_axioms(Matroid::uniform(4, 2)).ok);
  CHECK(verify_rank_axioms(Matroid::graphic(triangle())).ok);
  CHECK(verify_rank_axioms(Matroid::partition({{0}, {1}}, {1, 1})).ok);
  CHECK(verify_rank_axioms(Matroid::explicit_sets(0, {0})).ok);

  const Matroid not_closed = Matroid::explicit_sets(2, {0b00, 0b11});
  const auto& gap = verify_rank_axioms(not_closed);
  CHECK(!gap.ok);
  CHECK(gap.check == "downward-closure");
  CHECK(gap.detail == "{0} missing");

  const Matroid no_sets = Matroid::explicit_sets(1, {});
  const auto& empty = verify_rank_axioms(no_sets);
  CHECK(!empty.ok);
  CHECK(empty.check == "empty-list");

  // Downward closed but not exchangeable: {0,1} cannot augment {2}.
  const Matroid no_exchange =
      Matroid::explicit_sets(3, {0b000, 0b001, 0b010, 0b011, 0b100});
  const auto& ex = verify_rank_axioms(no_exchange);
  CHECK(!ex.ok);
  CHECK(ex.check == "exchange");
  CHECK(ex.detail == "no element of {0,1} extends {2}");

  // The report is cached: the same object comes back.
  const Matroid u = Matroid::uniform(3, 2);
  CHECK(&verify_rank_axioms(u) == &verify_rank_axioms(u));

  CHECK_THROWS_AS(verify_rank_axioms(Matroid::uniform(11, 2)),
                  ResourceLimitError);
  CHECK(verify_rank_axioms(Matroid::uniform(11, 2), 11).ok);
}

TEST_CASE("greedy on the frozen examples") {
  const auto u = greedy_max_weight_independent(
      {Matroid::uniform(3, 2), {Rational(5), Rational(3), Rational(2)}});
  CHECK(u.first == std::vector<int>{0, 1});
  CHECK(u.second == Rational(8));

  const auto g = greedy_max_weight_independent(
      {Matroid::graphic(triangle()), {Rational(4), Rational(3), Rational(2)}});
  CHECK(g.first == std::vector<int>{0, 1});
  CHECK(g.second == Rational(7));

  const auto zero = greedy_max_weight_independent(
      {Matroid::uniform(3, 2), {Rational(0), Rational(0), Rational(0)}});
  CHECK(zero.second == Rational(0));
  CHECK(Matroid::uniform(3, 2).independent(mask_from_vector(zero.first)));

  // Weight ties break toward the lower element index.
  const auto tie = greedy_max_weight_independent(
      {Matroid::uniform(3, 1), {Rational(3), Rational(3), Rational(3)}});
  CHECK(tie.first == std::vector<int>{0});

  const auto eb = brute_force_max_weight_independent(
      {Matroid::explicit_sets(2, {0b00, 0b01, 0b10}),
       {Rational(2), Rational(7)}});
  CHECK(eb.first == std::vector<int>{1});
  CHECK(eb.second == Rational(7));
  CHECK(brute_force_max_weight_independent(
            {Matroid::uniform(0, 0), {}})
            .second == Rational(0));
}

TEST_CASE("greedy refuses axiom violations unless waived") {
  const Matroid bad = Matroid::explicit_sets(2, {0b00, 0b11});
  const WeightedMatroid wm{bad, {Rational(1), Rational(2)}};
  CHECK_THROWS_AS(greedy_max_weight_independent(wm, 0b11), ContractError);
  // Waived, the literal loop still runs; it picks nothing because neither
  // singleton grows the rank, exactly the failure mode the gate guards.
  const auto waived = greedy_max_weight_independent(wm, 0b11, true);
  CHECK(waived.first.empty());
  CHECK(waived.second == Rational(0));

  const WeightedMatroid big{Matroid::uniform(12, 3),
                            std::vector<Rational>(12, Rational(1))};
  CHECK_THROWS_AS(greedy_max_weight_independent(big, full_mask(12)),
                  ResourceLimitError);
  CHECK(greedy_max_weight_independent(big, full_mask(12), true).second ==
        Rational(3));
  CHECK_THROWS_AS(brute_force_max_weight_independent(big, full_mask(12)),
                  ResourceLimitError);
  CHECK_THROWS_AS(
      greedy_max_weight_independent(big, 1ULL << 12, true),
      MalformedInputError);
}

TEST_CASE("greedy matches brute force on every kind") {
  Rng rng(91);
  for (int trial = 0; trial < 120; ++trial) {
    const Matroid m = random_matroid(rng);
    const int n = m.element_count();
    const auto w = random_weights(rng, n);
    const WeightedMatroid wm{m, w};
    const Mask inside = rng.next_u64() & full_mask(n);

    const auto greedy = greedy_max_weight_independent(wm, inside);
    const auto brute = brute_force_max_weight_independent(wm, inside);
    CHECK(greedy.second == brute.second);
    const Mask picked = mask_from_vector(greedy.first);
    CHECK((picked & ~inside) == 0);
    CHECK(m.rank(picked) == popcount(picked));
    CHECK(greedy == greedy_max_weight_independent(wm, inside));

    if (n <= 6) CHECK(verify_rank_axioms(m).ok);
  }
}

TEST_CASE("explicit materialization preserves the rank function") {
  Rng rng(105);
  for (int trial = 0; trial < 30; ++trial) {
    Matroid base = random_matroid(rng);
    if (base.element_count() > 6) continue;
    const auto list = materialize_independent(base);
    const Matroid ex = Matroid::explicit_sets(base.element_count(), list);
    const Mask all = full_mask(base.element_count());
    for (Mask s = 0;; s = (s - all) & all) {
      CHECK(ex.rank(s) == base.rank(s));
      CHECK(ex.independent(s) ==
            std::binary_search(list.begin(), list.end(), s));
      if (s == all) break;
    }
    CHECK(verify_rank_axioms(ex).ok);
  }
}
