#include <doctest.h>

#include "oracles.hpp"
#include "posetff/generators.hpp"
#include "posetff/interval_extension.hpp"
#include "posetff/json_io.hpp"

using namespace posetff;

TEST_CASE("splitmix64 reference output") {
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xe220a8397b1dcdafULL);
  CHECK(s == 0x9e3779b97f4a7c15ULL);
}

TEST_CASE("bounded draws stay in range") {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    CHECK(rng.below(7) < 7);
    const auto x = rng.between(-3, 3);
    CHECK((x >= -3 && x <= 3));
    const double u = rng.unit();
    CHECK((u >= 0.0 && u < 1.0));
  }
  CHECK_THROWS_AS(rng.below(0), ParamError);
  CHECK_FALSE(rng.bernoulli(0.0));
  CHECK(rng.bernoulli(1.0));
}

TEST_CASE("gen_interval_order examples") {
  CHECK(gen_interval_order(1, 0, 1).size() == 0);
  CHECK(gen_interval_order(1, 1, 2).size() == 1);
  const Poset p = gen_interval_order(7, 30, 60);
  CHECK(is_interval_order(p));
  CHECK_FALSE(find_k_plus_k(p, 2));
  CHECK_THROWS_AS(gen_interval_order(1, 3, 0), ParamError);
}

TEST_CASE("generated interval orders are 2+2-free and extend within their width") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Poset p = gen_interval_order(seed, 12, 20);
    CHECK_FALSE(oracle::has_two_plus_two(oracle::less_matrix(p)));
    auto r = interval_order_of(p, 2);
    REQUIRE(std::holds_alternative<IntervalExtension>(r));
    CHECK(width(std::get<IntervalExtension>(r).order) <= width(p));
  }
}

TEST_CASE("gen_interval_order_of_width hits the width") {
  for (std::size_t w = 1; w <= 5; ++w) CHECK(width(gen_interval_order_of_width(w, 4 * w, w)) == w);
  CHECK_THROWS_AS(gen_interval_order_of_width(1, 2, 3), ParamError);
  CHECK_THROWS_AS(gen_interval_order_of_width(1, 40, 3, 0), GaveUp);
}

TEST_CASE("gen_kk_free examples") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Poset p = gen_kk_free(seed, 10, 2).poset;
    CHECK(is_interval_order(p));
  }
  const auto s = gen_kk_free(1, 18, 3);
  CHECK_FALSE(find_k_plus_k(s.poset, 3));
  CHECK(s.poset.size() == 18);
  CHECK(gen_kk_free(9, 1, 4).tries == 1);
  CHECK_THROWS_AS(gen_kk_free(1, 5, 1), ParamError);

  KkFreeOptions hopeless;
  hopeless.target_width = 2;
  hopeless.density = 0.0;
  hopeless.max_tries = 3;
  CHECK_THROWS_AS(gen_kk_free(1, 20, 2, hopeless), GaveUp);
}

TEST_CASE("gen_kk_free with a target width") {
  KkFreeOptions opts;
  opts.target_width = 3;
  opts.density = 0.4;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = gen_kk_free(seed, 12, 3, opts);
    CHECK(width(s.poset) == 3);
    CHECK_FALSE(oracle::has_k_plus_k(oracle::less_matrix(s.poset), 3));
    CHECK(gen_chain_union(s.sample_seed, 12, 3, 0.4) == s.poset);
  }
}

TEST_CASE("gen_graph examples") {
  CHECK(gen_graph(4, 8, 0.0).edge_count() == 0);
  CHECK(gen_graph(4, 8, 1.0).edge_count() == 28);
  CHECK_THROWS_AS(gen_graph(4, 8, 1.5), ParamError);
}

TEST_CASE("gen_graph regression fixture") {
  const std::vector<Relation> pinned{{0, 1}, {0, 3}, {0, 5}, {0, 8}, {1, 3}, {2, 3},
                                     {2, 7}, {3, 5}, {3, 8}, {4, 6}, {7, 8}};
  CHECK(gen_graph(3, 9, 0.4).edges() == pinned);
}

TEST_CASE("generation is deterministic") {
  for (GenKind kind : {GenKind::IntervalOrder, GenKind::RandomDag, GenKind::KkFreeRejection}) {
    GenConfig c;
    c.seed = 12;
    c.n = 15;
    c.kind = kind;
    c.k = 3;
    const auto a = json::write_poset(generate_poset(c), json::meta_of(c));
    const auto b = json::write_poset(generate_poset(c), json::meta_of(c));
    CHECK(a == b);
  }
  GenConfig g;
  g.kind = GenKind::RandomGraph;
  g.n = 10;
  g.seed = 3;
  CHECK(json::write_graph(generate_graph(g)) == json::write_graph(generate_graph(g)));
  CHECK_THROWS_AS(generate_poset(g), ParamError);
  g.kind = GenKind::RandomDag;
  CHECK_THROWS_AS(generate_graph(g), ParamError);
}

TEST_CASE("derived seeds differ per index") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
}

TEST_CASE("kind names") {
  CHECK(to_string(GenKind::IntervalOrder) == "intervalOrder");
  CHECK(to_string(GenKind::RandomDag) == "randomDag");
  CHECK(to_string(GenKind::KkFreeRejection) == "kkFreeRejection");
  CHECK(to_string(GenKind::RandomGraph) == "randomGraph");
}
