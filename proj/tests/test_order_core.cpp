#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "posetff/adversary.hpp"
#include "posetff/generators.hpp"
#include "posetff/poset.hpp"

using namespace posetff;

namespace {

Poset two_plus_two() {
  const std::vector<Relation> rel{{0, 1}, {2, 3}};
  return Poset::build(4, rel);
}

bool axioms_hold(const Poset& p) {
  for (Id u = 0; u < p.size(); ++u) {
    if (p.less(u, u)) return false;
    for (Id v = 0; v < p.size(); ++v) {
      if (p.less(u, v) && p.less(v, u)) return false;
      for (Id w = 0; w < p.size(); ++w)
        if (p.less(u, v) && p.less(v, w) && !p.less(u, w)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("build closes relations transitively") {
  const std::vector<Relation> rel{{0, 1}, {1, 2}};
  const Poset p = Poset::build(4, rel);
  CHECK(p.less(0, 2));
  CHECK(p.greater(2, 0));
  CHECK_FALSE(p.less(2, 0));
  CHECK(p.incomparable(3, 0));
  CHECK(p.comparable(1, 1));
}

TEST_CASE("build rejects cycles and bad ids") {
  const std::vector<Relation> cyc{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Poset::build(3, cyc), CycleError);
  const std::vector<Relation> loop{{2, 2}};
  CHECK_THROWS_AS(Poset::build(3, loop), CycleError);
  const std::vector<Relation> bad{{0, 3}};
  CHECK_THROWS_AS(Poset::build(3, bad), IdOutOfRange);
  CHECK_THROWS_AS(Poset::build(2, {}, {"only-one"}), SizeMismatch);
}

TEST_CASE("closure matches Floyd-Warshall on random relations") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(14);
    std::vector<Relation> rel;
    const std::size_t m = rng.below(2 * n + 1);
    for (std::size_t i = 0; i < m; ++i) {
      Id u = rng.below(n), v = rng.below(n);
      if (u != v) rel.emplace_back(u, v);
    }
    const auto want = oracle::closure(n, rel);
    if (!want) {
      CHECK_THROWS_AS(Poset::build(n, rel), CycleError);
      continue;
    }
    const Poset p = Poset::build(n, rel);
    CHECK(oracle::less_matrix(p) == *want);
    CHECK(axioms_hold(p));
  }
}

TEST_CASE("P_5 is a valid poset of width 2") {
  const auto kp = kierstead(5);
  CHECK(kp.poset.size() == 15);
  CHECK(axioms_hold(kp.poset));
  CHECK(width(kp.poset) == 2);
}

TEST_CASE("width_with_witness examples") {
  auto c = width_with_witness(Poset::chain(5));
  CHECK(c.width == 1);
  CHECK(c.witness.size() == 1);

  auto a = width_with_witness(Poset::antichain(7));
  CHECK(a.width == 7);
  CHECK(std::set<Id>(a.witness.elements.begin(), a.witness.elements.end()).size() == 7);

  CHECK(width(stacked(5, 4).poset) == 4);
  CHECK(width(Poset{}) == 0);
  CHECK(dilworth_partition(Poset{}).size() == 0);
}

TEST_CASE("Dilworth partition examples") {
  const auto a3 = dilworth_partition(Poset::antichain(3));
  CHECK(a3.size() == 3);
  for (const auto& ch : a3.chains) CHECK(ch.size() == 1);

  const auto kp = kierstead(5);
  const auto cp = dilworth_partition(kp.poset);
  CHECK(cp.size() == 2);
  CHECK(is_chain_partition(kp.poset, cp));

  const auto p22 = dilworth_partition(two_plus_two());
  CHECK(p22.size() == 2);
  CHECK(is_chain_partition(two_plus_two(), p22));
}

TEST_CASE("width and Dilworth agree with the subset oracle") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed);
    const std::size_t n = rng.below(15);
    const Poset p = gen_random_dag(seed, n, rng.unit());
    const auto wr = width_with_witness(p);
    CHECK(wr.width == oracle::width(oracle::less_matrix(p)));
    CHECK(wr.witness.size() == wr.width);
    CHECK(is_antichain(p, wr.witness.elements));
    const auto cp = dilworth_partition(p);
    CHECK(cp.size() == wr.width);
    CHECK(is_chain_partition(p, cp));
  }
}

TEST_CASE("incomparability graph examples") {
  CHECK(incomparability_graph(Poset::chain(6)).edge_count() == 0);
  CHECK(incomparability_graph(Poset::antichain(6)).edge_count() == 15);

  // w = 3 incomparable chains of size k-1 = 2: complete 3-partite K_{2,2,2}.
  const std::vector<Relation> rel{{0, 1}, {2, 3}, {4, 5}};
  const Graph g = incomparability_graph(Poset::build(6, rel));
  CHECK(g.edge_count() == 12);
  for (Id u = 0; u < 6; ++u)
    for (Id v = 0; v < 6; ++v)
      if (u != v) CHECK(g.adjacent(u, v) == (u / 2 != v / 2));
}

TEST_CASE("two incomparable chains give a complete bipartite graph") {
  const std::vector<Relation> rel{{0, 1}, {1, 2}, {3, 4}};
  const Graph g = incomparability_graph(Poset::build(5, rel));
  for (Id u = 0; u < 5; ++u)
    for (Id v = u + 1; v < 5; ++v) CHECK(g.adjacent(u, v) == ((u < 3) != (v < 3)));
}

TEST_CASE("find_k_plus_k examples") {
  const auto w = find_k_plus_k(two_plus_two(), 2);
  REQUIRE(w);
  CHECK(is_kk_witness(two_plus_two(), *w, 2));
  std::set<Id> used(w->a.elements.begin(), w->a.elements.end());
  used.insert(w->b.elements.begin(), w->b.elements.end());
  CHECK(used == std::set<Id>{0, 1, 2, 3});

  CHECK_FALSE(find_k_plus_k(gen_interval_order(11, 25, 40), 2));
  for (std::size_t q = 1; q <= 5; ++q) CHECK_FALSE(find_k_plus_k(kierstead(q).poset, q + 1));
  CHECK_THROWS_AS(find_k_plus_k(two_plus_two(), 0), ParamError);
}

TEST_CASE("find_k_plus_k reports an exhausted budget") {
  CHECK_THROWS_AS(find_k_plus_k(stacked(4, 4).poset, 4, 3), BudgetExhausted);
}

TEST_CASE("find_k_plus_k agrees with the subset oracle") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed ^ 0xabc);
    const std::size_t n = rng.below(13);
    const std::size_t k = 1 + rng.below(3);
    const Poset p = gen_random_dag(seed, n, 0.2 + 0.6 * rng.unit());
    const auto w = find_k_plus_k(p, k);
    CHECK(w.has_value() == oracle::has_k_plus_k(oracle::less_matrix(p), k));
    if (w) CHECK(is_kk_witness(p, *w, k));
  }
}

TEST_CASE("is_extension examples") {
  const Poset c3 = Poset::chain(3);
  CHECK(is_extension(c3, c3));
  CHECK(is_extension(c3, Poset::antichain(3)));
  CHECK_FALSE(is_extension(Poset::antichain(3), c3));
  CHECK_THROWS_AS(is_extension(c3, Poset::chain(4)), SizeMismatch);
}

TEST_CASE("interval_order_from_intervals examples") {
  using I = ClosedInterval<long long>;
  const Poset two = interval_order_from_intervals(std::vector<I>{{0, 1}, {2, 3}});
  CHECK(two.less(0, 1));

  const Poset anti = interval_order_from_intervals(std::vector<I>{{0, 2}, {1, 3}});
  CHECK(anti.incomparable(0, 1));

  const Poset three = interval_order_from_intervals(std::vector<I>{{0, 0}, {1, 1}, {0, 1}});
  CHECK(three.less(0, 1));
  CHECK(three.incomparable(2, 0));
  CHECK(three.incomparable(2, 1));

  const Poset rational = interval_order_from_intervals(
      std::vector<ClosedInterval<double>>{{0.0, 0.5}, {0.75, 1.0}});
  CHECK(rational.less(0, 1));

  CHECK_THROWS_AS(interval_order_from_intervals(std::vector<I>{{3, 2}}), MalformedInterval);
}

TEST_CASE("is_interval_order examples") {
  CHECK_FALSE(is_interval_order(two_plus_two()));
  CHECK(is_interval_order(gen_interval_order(5, 30, 50)));
  // 4-subset scan: P_3 has no 2+2, P_4 has one.
  CHECK(is_interval_order(kierstead(3).poset));
  CHECK_FALSE(is_interval_order(kierstead(4).poset));
  CHECK(is_interval_order(Poset{}));
}

TEST_CASE("2+2 scan, k+k search and 4-subset brute force agree") {
  for (std::uint64_t seed = 100; seed < 250; ++seed) {
    Rng rng(seed);
    const std::size_t n = rng.below(13);
    const Poset p = gen_random_dag(seed, n, rng.unit());
    const bool brute = oracle::has_two_plus_two(oracle::less_matrix(p));
    CHECK(is_interval_order(p) == !brute);
    CHECK(find_k_plus_k(p, 2).has_value() == brute);
    if (auto w = find_two_plus_two(p)) CHECK(is_kk_witness(p, *w, 2));
  }
}

TEST_CASE("relations, covers and linear extension") {
  const std::vector<Relation> rel{{0, 1}, {1, 2}, {0, 2}, {3, 2}};
  const Poset p = Poset::build(4, rel);
  CHECK(p.relations() == std::vector<Relation>{{0, 1}, {0, 2}, {1, 2}, {3, 2}});
  CHECK(p.cover_relations() == std::vector<Relation>{{0, 1}, {1, 2}, {3, 2}});
  CHECK(Poset::build(4, p.cover_relations()) == p);

  const auto ext = p.linear_extension();
  std::vector<std::size_t> pos(4);
  for (std::size_t i = 0; i < 4; ++i) pos[ext[i]] = i;
  for (const auto& [u, v] : p.relations()) CHECK(pos[u] < pos[v]);
}

TEST_CASE("graph construction") {
  const std::vector<Relation> e{{0, 1}, {1, 2}};
  const Graph g = Graph::from_edges(3, e);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  const std::vector<Relation> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InvalidGraph);
  const std::vector<Relation> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), InvalidGraph);
  const std::vector<Relation> bad{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, bad), IdOutOfRange);
}
