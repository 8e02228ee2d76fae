#include "doctest.h"
#include "liftforge/derived.hpp"
#include "liftforge/errors.hpp"

using namespace liftforge;

namespace {

Representation all_ones(int n) {
  return make_representation(FieldMatrix(Field::gf(2), 1, n, std::vector<int>(n, 1)),
                             uniform_matroid(1, n));
}

}  // namespace

TEST_CASE("representation validation") {
  CHECK_NOTHROW(all_ones(4));
  // The all-ones row is not a rank-2 matroid.
  CHECK_THROWS_AS(make_representation(FieldMatrix(Field::gf(2), 1, 4, {1, 1, 1, 1}),
                                      uniform_matroid(2, 4)),
                  ValidationError);
}

TEST_CASE("derived space of the all-ones representation is the complete graph") {
  Representation rep = all_ones(4);
  CircuitSpace ns = derived_circuit_space(rep);
  CHECK(ns.n.size() == 6);
  CHECK(ns.n.rank() == 3);  // corank of uniform(1,4)
  std::vector<std::pair<int, int>> edges;
  for (const auto& c : ns.family.sets) {
    auto e = c.elements();
    edges.emplace_back(e[0], e[1]);
  }
  CHECK(isomorphism(ns.n, graphic_matroid(4, edges)).has_value());
}

TEST_CASE("free representations have empty derived grounds") {
  Representation rep = make_representation(FieldMatrix(Field::gf(2), 2, 2, {1, 0, 0, 1}),
                                           free_matroid(2));
  CircuitSpace ns = derived_circuit_space(rep);
  CHECK(ns.n.size() == 0);
  Matroid lifted = derived_free_lift(rep);
  CHECK(lifted.rank() == 2);
}

TEST_CASE("derived rank equals the corank") {
  // Triangle incidence matrix over GF(2): one circuit, derived rank 1.
  Representation tri = make_representation(
      FieldMatrix(Field::gf(2), 3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1}),
      graphic_matroid(3, {{0, 1}, {0, 2}, {1, 2}}));
  CircuitSpace ns = derived_circuit_space(tri);
  CHECK(ns.n.size() == 1);
  CHECK(ns.n.rank() == 1);

  Representation u25 = make_representation(
      FieldMatrix(Field::gf(2, 2), 2, 5, {1, 0, 1, 1, 1, 0, 1, 1, 2, 3}), uniform_matroid(2, 5));
  CHECK(derived_circuit_space(u25).n.rank() == 3);
}

TEST_CASE("derived columns carry canonical scaling") {
  Representation rep = make_representation(
      FieldMatrix(Field::gf(3), 2, 4, {1, 0, 1, 1, 0, 1, 1, 2}), uniform_matroid(2, 4));
  FieldMatrix a = derived_matrix(rep);
  for (int c = 0; c < a.cols(); ++c) {
    int lowest = -1;
    for (int r = 0; r < a.rows(); ++r) {
      if (a.at(r, c) != 0) {
        lowest = r;
        break;
      }
    }
    REQUIRE(lowest >= 0);
    CHECK(a.at(lowest, c) == 1);
  }
}

TEST_CASE("derived lift is free and the closure condition holds") {
  for (int n = 3; n <= 5; ++n) {
    Matroid lifted = derived_free_lift(all_ones(n));
    CHECK(lifted.rank() == n);
  }
  Representation u24 = make_representation(
      FieldMatrix(Field::gf(3), 2, 4, {1, 0, 1, 1, 0, 1, 1, 2}), uniform_matroid(2, 4));
  Matroid lifted = derived_free_lift(u24);
  CHECK(lifted.rank() == 4);
}

TEST_CASE("derived truncations keep the closure condition") {
  Representation rep = all_ones(4);
  for (int k = 1; k <= 3; ++k) {
    CircuitSpace ns = truncated_derived_space(rep, k);
    CHECK(ns.n.rank() == k);
    CHECK(satisfies_star(ns).pass);
  }
  CHECK_THROWS_AS(truncated_derived_space(rep, 0), ParseError);
  CHECK_THROWS_AS(truncated_derived_space(rep, 4), ParseError);
  // k = corank leaves the derived space untouched.
  CircuitSpace full = truncated_derived_space(rep, 3);
  CircuitSpace base = derived_circuit_space(rep);
  full.n.materialize();
  base.n.materialize();
  CHECK(full.n.table() == base.n.table());
}
