#include "doctest.h"
#include "liftforge/catalog.hpp"
#include "liftforge/errors.hpp"

using namespace liftforge;

TEST_CASE("labeled matroid counts match the published sequence") {
  CHECK(enumerate_matroids(3, 3).size() == 1);
  CHECK(enumerate_matroids(2, 1).size() == 3);
  std::vector<std::size_t> expected = {1, 2, 5, 16, 68, 406};
  for (int m = 0; m <= 5; ++m) {
    CHECK(matroid_catalog(m).size() == expected[m]);
  }
  // Per-rank breakdown on four elements; symmetric under duality.
  std::vector<std::size_t> by_rank = {1, 15, 36, 15, 1};
  for (int r = 0; r <= 4; ++r) {
    CHECK(enumerate_matroids(4, r).size() == by_rank[r]);
  }
}

TEST_CASE("labeled matroid count at ground six") {
  CHECK(matroid_catalog(6).size() == 3807);
}

TEST_CASE("catalog members are matroids") {
  for (const auto& m : matroid_catalog(4)) {
    CHECK(check_rank_axioms(m).pass);
  }
}

TEST_CASE("intermediate matroids") {
  Matroid u24 = uniform_matroid(2, 4);
  auto only = intermediate_matroids(u24, u24);
  REQUIRE(only.size() == 1);
  only[0].materialize();
  CHECK(only[0].table() == u24.materialize().table());

  // Everything sits between the rank-0 matroid and the free matroid.
  CHECK(intermediate_matroids(free_matroid(3), rank_zero_matroid(3)).size() == 16);
  CHECK_THROWS_AS(intermediate_matroids(rank_zero_matroid(3), free_matroid(3)),
                  ConstructionError);
}

TEST_CASE("predicted space for the rank-1 uniform base") {
  LabReport r = conjecture73_family(uniform_matroid(1, 4), free_matroid(4));
  CHECK(r.family_is_matroid);
  CHECK(r.star_pass);
  CHECK(r.lift_isomorphic);
  CHECK(r.success);
  CHECK_FALSE(r.counterexample_candidate);
}

TEST_CASE("predicted spaces succeed at low corank") {
  for (auto [m, k] : std::vector<std::pair<Matroid, Matroid>>{
           {uniform_matroid(2, 4), free_matroid(4)},
           {uniform_matroid(1, 3), free_matroid(3)},
           {uniform_matroid(2, 4), uniform_matroid(3, 4)},
       }) {
    REQUIRE(m.corank() <= 2);
    LabReport r = conjecture73_family(m, k);
    CHECK_MESSAGE(r.success, r.text());
  }
}

TEST_CASE("space search finds the triangle space and the trivial one") {
  LabReport r = conjecture72_search(uniform_matroid(1, 3), free_matroid(3));
  CHECK(r.success);
  bool triangle = false;
  for (const auto& w : r.witnesses) {
    if (isomorphism(w, uniform_matroid(2, 3)).has_value()) triangle = true;
  }
  CHECK(triangle);

  // k = m is always witnessed by the rank-0 space.
  LabReport same = conjecture72_search(uniform_matroid(2, 4), uniform_matroid(2, 4));
  CHECK(same.success);
  bool rank0 = false;
  for (const auto& w : same.witnesses) rank0 = rank0 || w.rank() == 0;
  CHECK(rank0);
}

TEST_CASE("dual-side instance through the bridge") {
  LabReport r = dual_projection_family(uniform_matroid(2, 4), uniform_matroid(1, 4));
  CHECK_MESSAGE(r.success, r.text());
}

TEST_CASE("reports are deterministic") {
  LabReport a = conjecture73_family(uniform_matroid(1, 4), free_matroid(4));
  LabReport b = conjecture73_family(uniform_matroid(1, 4), free_matroid(4));
  CHECK(a.text() == b.text());
}

TEST_CASE("capacity limits") {
  CHECK_THROWS_AS(enumerate_matroids(7, 3), CapacityError);
  CHECK_THROWS_AS(conjecture73_family(uniform_matroid(3, 6), free_matroid(6)), CapacityError);
  CHECK_NOTHROW(conjecture73_family(uniform_matroid(4, 6), free_matroid(6), 6));
  // More than six circuits is out of reach for the exhaustive space search.
  CHECK_THROWS_AS(conjecture72_search(uniform_matroid(1, 5), free_matroid(5)), CapacityError);
}
