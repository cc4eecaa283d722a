#include <doctest.h>

#include "oracles.hpp"
#include "posetff/adversary.hpp"
#include "posetff/first_fit.hpp"

using namespace posetff;

namespace {

// The defining rule, evaluated directly on coordinates.
bool kierstead_less(std::size_t i, std::size_t j, std::size_t i2, std::size_t j2) {
  return i + 2 <= i2 || ((i + 1 == i2 || i == i2) && j + 1 <= j2);
}

}  // namespace

TEST_CASE("kierstead relation follows the coordinate rule") {
  for (std::size_t q = 1; q <= 7; ++q) {
    const auto kp = kierstead(q);
    REQUIRE(kp.poset.size() == q * (q + 1) / 2);
    for (Id u = 0; u < kp.poset.size(); ++u) {
      const auto cu = KiersteadPoset::coord_of(u);
      CHECK(KiersteadPoset::id_of(cu.row, cu.col) == u);
      for (Id v = 0; v < kp.poset.size(); ++v) {
        const auto cv = KiersteadPoset::coord_of(v);
        CHECK(kp.poset.less(u, v) == kierstead_less(cu.row, cu.col, cv.row, cv.col));
      }
    }
  }
}

TEST_CASE("kierstead examples") {
  const auto p5 = kierstead(5);
  CHECK(p5.poset.size() == 15);
  CHECK(first_fit_chains(p5.poset, p5.natural).chains_used() == 5);
  CHECK(p5.poset.name(KiersteadPoset::id_of(3, 2)) == "v_{3,2}");

  const auto p2 = kierstead(2);
  CHECK(p2.poset.size() == 3);
  CHECK(first_fit_chains(p2.poset, p2.natural).chains_used() == 2);

  const auto p1 = kierstead(1);
  CHECK(p1.poset.size() == 1);
  CHECK(first_fit_chains(p1.poset, p1.natural).chains_used() == 1);

  CHECK_THROWS_AS(kierstead(0), ParamError);
}

TEST_CASE("First-Fit on P_q matches the closed form") {
  for (std::size_t q = 2; q <= 20; ++q) {
    const auto kp = kierstead(q);
    const auto r = first_fit_chains(kp.poset, kp.natural);
    CHECK(r.chains_used() == q);
    CHECK(width(kp.poset) == 2);
    const AdversaryParams params{AdversaryKind::Kierstead, q, 0, 0};
    for (Id u = 0; u < kp.poset.size(); ++u) CHECK(r.assignment[u] == predicted_assignment(params, u));
  }
}

TEST_CASE("P_q elements have at most q incomparable partners") {
  for (std::size_t q = 2; q <= 7; ++q) {
    const Graph g = incomparability_graph(kierstead(q).poset);
    for (Id u = 0; u < g.size(); ++u) CHECK(g.degree(u) <= q);
  }
}

TEST_CASE("stacked examples") {
  const auto q54 = stacked(5, 4);
  CHECK(q54.poset.size() == 30);
  CHECK(first_fit_chains(q54.poset, q54.order).chains_used() == 12);
  CHECK(width(q54.poset) == 4);
  CHECK(q54.poset.name(q54.id_of(AdversaryCoord{3, 4, 1})) == "v^3_{4,1}");

  const auto q33 = stacked(3, 3);
  CHECK(first_fit_chains(q33.poset, q33.order).chains_used() == 4);
  CHECK(width(q33.poset) == 3);
  CHECK_FALSE(find_k_plus_k(q33.poset, 3));
  CHECK_FALSE(oracle::has_k_plus_k(oracle::less_matrix(q33.poset), 3));

  const auto q32 = stacked(3, 2);
  CHECK(q32.poset == kierstead(2).poset);
  CHECK(first_fit_chains(q32.poset, q32.order).chains_used() == 2);

  CHECK_THROWS_AS(stacked(2, 4), ParamError);
  CHECK_THROWS_AS(stacked(4, 1), ParamError);
}

TEST_CASE("stacked relation follows the copy rule") {
  for (std::size_t k = 3; k <= 5; ++k)
    for (std::size_t w = 2; w <= 4; ++w) {
      const auto sp = stacked(k, w);
      REQUIRE(sp.poset.size() == (w - 1) * sp.copy_size());
      for (Id u = 0; u < sp.poset.size(); ++u) {
        const auto cu = sp.coord_of(u);
        CHECK(sp.id_of(cu) == u);
        for (Id v = 0; v < sp.poset.size(); ++v) {
          const auto cv = sp.coord_of(v);
          bool want = false;
          if (cu.copy == cv.copy) want = kierstead_less(cu.row, cu.col, cv.row, cv.col);
          else if (cu.copy < cv.copy) want = cu.row != k - 1;
          CHECK(sp.poset.less(u, v) == want);
        }
      }
    }
}

TEST_CASE("stacked k=2 substitute") {
  const auto a = stacked_k2_antichain(4);
  CHECK(a.poset == Poset::antichain(4));
  CHECK(first_fit_chains(a.poset, a.order).chains_used() == 4);
  CHECK_FALSE(find_k_plus_k(a.poset, 2));
  const AdversaryParams params{AdversaryKind::Stacked, 0, 2, 4};
  CHECK(predicted_assignment(params, 3) == 4);
  CHECK_THROWS_AS(predicted_assignment(params, 4), OutOfRange);
}

TEST_CASE("predicted_assignment examples") {
  const AdversaryParams p5{AdversaryKind::Kierstead, 5, 0, 0};
  CHECK(predicted_assignment(p5, KiersteadPoset::id_of(5, 5)) == 1);
  CHECK(predicted_assignment(p5, KiersteadPoset::id_of(5, 1)) == 5);
  CHECK_THROWS_AS(predicted_assignment(p5, 15), OutOfRange);

  const auto q54 = stacked(5, 4);
  const AdversaryParams s54{AdversaryKind::Stacked, 0, 5, 4};
  const Id v = q54.id_of(AdversaryCoord{3, 4, 1});
  CHECK(predicted_assignment(s54, v) == 12);
  CHECK(first_fit_chains(q54.poset, q54.order).assignment[v] == 12);
  CHECK_THROWS_AS(predicted_assignment(s54, 30), OutOfRange);
}

TEST_CASE("First-Fit on Q_{k,w} matches the closed form") {
  for (std::size_t k = 3; k <= 7; ++k)
    for (std::size_t w = 2; w <= 6; ++w) {
      const auto sp = stacked(k, w);
      const auto r = first_fit_chains(sp.poset, sp.order);
      CHECK(r.chains_used() == (k - 1) * (w - 1));
      CHECK(width(sp.poset) == w);
      const AdversaryParams params{AdversaryKind::Stacked, 0, k, w};
      for (Id u = 0; u < sp.poset.size(); ++u) CHECK(r.assignment[u] == predicted_assignment(params, u));
    }
}

TEST_CASE("stacked posets are k+k-free") {
  for (std::size_t k = 3; k <= 4; ++k)
    for (std::size_t w = 2; w <= 4; ++w) {
      const auto sp = stacked(k, w);
      CHECK_FALSE(find_k_plus_k(sp.poset, k));
      if (sp.poset.size() <= 12) CHECK_FALSE(oracle::has_k_plus_k(oracle::less_matrix(sp.poset), k));
    }
}

TEST_CASE("adversary labels") {
  CHECK(adversary_label(AdversaryKind::Kierstead, AdversaryCoord{1, 4, 2}) == "v_{4,2}");
  CHECK(adversary_label(AdversaryKind::Stacked, AdversaryCoord{2, 3, 1}) == "v^2_{3,1}");
}
