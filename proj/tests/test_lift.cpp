#include <algorithm>

#include "doctest.h"
#include "liftforge/errors.hpp"
#include "liftforge/lift.hpp"
#include "liftforge/parallel.hpp"

using namespace liftforge;

namespace {

Matroid complete_graphic(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return graphic_matroid(n, std::move(edges));
}

// The complete-graph space over the pair circuits of a rank-1 uniform base.
CircuitSpace pair_graph_space(const Matroid& m) {
  CircuitFamily family = circuit_family(m);
  std::vector<std::pair<int, int>> edges;
  for (const auto& c : family.sets) {
    auto e = c.elements();
    edges.emplace_back(e[0], e[1]);
  }
  return circuit_space(std::move(family), graphic_matroid(m.size(), std::move(edges)));
}

}  // namespace

TEST_CASE("fundamental circuits form perfect collections") {
  Matroid u13 = uniform_matroid(1, 3);
  CircuitFamily family = circuit_family(u13);
  SmallSet fc = fundamental_circuits(family, SmallSet::of({0}));
  // The two circuits through element 0: {0,1} and {0,2}.
  CHECK(fc == SmallSet::of({family.index_of(SmallSet::of({0, 1})),
                            family.index_of(SmallSet::of({0, 2}))}));
  CHECK(is_perfect(family, fc));

  CHECK(fundamental_circuits(circuit_family(free_matroid(4)), SmallSet::first_n(4)).empty());

  Matroid u24 = uniform_matroid(2, 4);
  CircuitFamily f24 = circuit_family(u24);
  SmallSet fc24 = fundamental_circuits(f24, SmallSet::of({0, 1}));
  CHECK(fc24.count() == 2);
  CHECK(is_perfect(f24, fc24));
  CHECK_THROWS_AS(fundamental_circuits(f24, SmallSet::of({0})), ValidationError);
}

TEST_CASE("perfection test") {
  CircuitFamily family = circuit_family(uniform_matroid(1, 3));
  CHECK(is_perfect(family, SmallSet{}));
  CHECK(is_perfect(family, SmallSet::of({0})));
  CHECK(is_perfect(family, SmallSet::of({0, 1})));
  CHECK_FALSE(is_perfect(family, SmallSet::of({0, 1, 2})));
}

TEST_CASE("perfect collections enumerate exactly once in canonical order") {
  CHECK(enumerate_perfect(circuit_family(free_matroid(3))).size() == 1);

  auto u13 = enumerate_perfect(circuit_family(uniform_matroid(1, 3)));
  REQUIRE(u13.size() == 7);  // empty, three singletons, three pairs
  CHECK(std::is_sorted(u13.begin(), u13.end()));
  CHECK(std::adjacent_find(u13.begin(), u13.end()) == u13.end());
  int pairs = 0;
  for (const auto& s : u13) pairs += (s.count() == 2);
  CHECK(pairs == 3);

  // Maximum-size collections are exactly the fundamental families of bases.
  Matroid u14 = uniform_matroid(1, 4);
  CircuitFamily f14 = circuit_family(u14);
  auto coll = enumerate_perfect(f14);
  std::vector<SmallSet> maximal;
  for (const auto& s : coll) {
    if (s.count() == u14.corank()) maximal.push_back(s);
  }
  std::vector<SmallSet> expected;
  for (int e = 0; e < 4; ++e) expected.push_back(fundamental_circuits(f14, SmallSet::single(e)));
  std::sort(expected.begin(), expected.end());
  CHECK(maximal == expected);
}

TEST_CASE("every enumerated collection is perfect and none is missed") {
  // Cross-check the pruned search against the definition over all subsets.
  for (const Matroid& m : {uniform_matroid(2, 5), complete_graphic(4), uniform_matroid(1, 4)}) {
    CircuitFamily family = circuit_family(m);
    auto fast = enumerate_perfect(family);
    std::vector<SmallSet> brute;
    std::uint64_t total = std::uint64_t{1} << family.size();
    for (std::uint64_t s = 0; s < total; ++s) {
      if (is_perfect(family, SmallSet::from_index(s))) brute.push_back(SmallSet::from_index(s));
    }
    CHECK(fast == brute);
  }
}

TEST_CASE("closure condition verdicts") {
  Matroid u13 = uniform_matroid(1, 3);
  CHECK(satisfies_star(pair_graph_space(u13)).pass);
  CHECK(satisfies_star(pair_graph_space(uniform_matroid(1, 4))).pass);

  // Rank-2 uniform spaces always pass.
  for (const Matroid& m : {uniform_matroid(2, 5), complete_graphic(4)}) {
    CircuitSpace ns = circuit_space(m, uniform_matroid(2, static_cast<int>(m.circuits().size())));
    CHECK(satisfies_star(ns).pass);
  }

  // The free space on the three circuits fails, and the least witness is the
  // first perfect pair spanning the third circuit.
  StarReport rep = satisfies_star(circuit_space(u13, free_matroid(3)));
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.collection == SmallSet::of({0, 1}));
  CHECK(rep.circuit == 2);
}

TEST_CASE("closure-condition verdict is worker-invariant") {
  int before = worker_count();
  CircuitSpace ns = circuit_space(uniform_matroid(1, 4), free_matroid(6));
  set_worker_count(1);
  StarReport a = satisfies_star(ns);
  set_worker_count(4);
  StarReport b = satisfies_star(ns);
  set_worker_count(before);
  CHECK(a.pass == b.pass);
  CHECK(a.collection == b.collection);
  CHECK(a.circuit == b.circuit);
}

TEST_CASE("lifting") {
  // Pair-graph space on three elements lifts the rank-1 uniform matroid to
  // the free matroid.
  Matroid u13 = uniform_matroid(1, 3);
  Matroid lifted = lift(u13, pair_graph_space(u13));
  lifted.materialize();
  CHECK(lifted.table() == free_matroid(3).materialize().table());

  // Rank-0 space returns the base unchanged.
  Matroid m = complete_graphic(4);
  Matroid same = lift(m, circuit_space(m, rank_zero_matroid(7)), /*check=*/true);
  same.materialize();
  m.materialize();
  CHECK(same.table() == m.table());

  CHECK(lift(uniform_matroid(1, 4), pair_graph_space(uniform_matroid(1, 4))).rank() == 4);

  // Checked lifts refuse a failing space.
  CHECK_THROWS_AS(lift(u13, circuit_space(u13, free_matroid(3))), ConstructionError);
}

TEST_CASE("lift invariants at desk scale") {
  struct Case {
    Matroid m;
    CircuitSpace ns;
  };
  std::vector<Case> cases;
  {
    Matroid m = uniform_matroid(1, 4);
    cases.push_back({m, pair_graph_space(m)});
  }
  {
    Matroid m = uniform_matroid(2, 5);
    cases.push_back({m, rank3_circuit_space(m)});
  }
  {
    Matroid m = complete_graphic(4);
    cases.push_back({m, circuit_space(m, uniform_matroid(2, 7))});
  }
  for (const auto& c : cases) {
    REQUIRE(satisfies_star(c.ns).pass);
    Matroid lifted = lift(c.m, c.ns, false);
    lifted.materialize();
    CHECK(check_rank_axioms(lifted).pass);
    CHECK(lifted.rank() == c.m.rank() + c.ns.n.rank());
    CHECK(is_quotient(c.m, lifted).pass);
    // Loops of the space are exactly the base circuits that stay circuits.
    for (int i = 0; i < c.ns.family.size(); ++i) {
      bool loop = c.ns.n.rank(SmallSet::single(i)) == 0;
      CHECK(loop == lifted.is_circuit(c.ns.family.sets[i]));
    }
    // Every circuit of the lift is a union of base circuits.
    for (const auto& circ : lifted.circuits()) {
      SmallSet covered;
      for (const auto& base_circ : c.ns.family.sets) {
        if (base_circ.subset_of(circ)) covered |= base_circ;
      }
      CHECK(covered == circ);
    }
    // Independence characterization against the rank formula.
    std::uint64_t total = std::uint64_t{1} << c.m.size();
    for (std::uint64_t x = 0; x < total; ++x) {
      SmallSet s = SmallSet::from_index(x);
      bool indep = lifted.rank(s) == s.count();
      CHECK(indep == has_independent_circuit_collection(c.ns, s, s.count() - c.m.rank(s)));
    }
  }
}

TEST_CASE("linear classes and elementary lifts") {
  Matroid k4 = complete_graphic(4);
  CircuitFamily family = circuit_family(k4);
  CHECK(is_linear_class(family, SmallSet::first_n(family.size())).pass);
  CHECK(is_linear_class(family, SmallSet{}).pass);

  // Two triangles sharing an edge, without the spanned quadrilateral.
  SmallSet two_triangles;
  int tri = 0;
  for (int i = 0; i < family.size() && tri < 2; ++i) {
    if (family.sets[i].count() == 3) {
      two_triangles.set(i);
      ++tri;
    }
  }
  LinearClassReport bad = is_linear_class(family, two_triangles);
  CHECK_FALSE(bad.pass);
  CHECK(bad.c >= 0);
  CHECK_THROWS_AS(brylawski(k4, two_triangles), ConstructionError);

  // The full class keeps the matroid, the empty class adds a free element.
  Matroid all = brylawski(complete_graphic(3), SmallSet::first_n(1));
  all.materialize();
  CHECK(all.table() == complete_graphic(3).materialize().table());
  Matroid none = brylawski(complete_graphic(3), SmallSet{});
  CHECK(none.rank() == 3);
  CHECK(check_rank_axioms(none).pass);
}

TEST_CASE("rank-3 circuit space") {
  Matroid u14 = uniform_matroid(1, 4);
  CircuitSpace ns = rank3_circuit_space(u14);
  CHECK(ns.n.rank() == 3);
  // Every pair of distinct circuits is independent and nothing is a loop.
  for (int i = 0; i < ns.family.size(); ++i) {
    CHECK(ns.n.rank(SmallSet::single(i)) == 1);
    for (int j = i + 1; j < ns.family.size(); ++j) {
      CHECK(ns.n.rank(SmallSet::of({i, j})) == 2);
    }
  }
  CHECK(satisfies_star(ns).pass);
  CHECK_THROWS_AS(rank3_circuit_space(uniform_matroid(2, 4)), ConstructionError);
}

TEST_CASE("space size must match the circuit count") {
  CHECK_THROWS_AS(circuit_space(uniform_matroid(1, 3), free_matroid(2)), ValidationError);
}
