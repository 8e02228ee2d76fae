#include <algorithm>
#include <set>

#include "doctest.h"
#include "liftforge/duallift.hpp"
#include "liftforge/errors.hpp"

using namespace liftforge;

namespace {

Matroid k4() {
  return graphic_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("hyperplane enumeration") {
  auto h23 = hyperplanes(uniform_matroid(2, 3));
  CHECK(h23 == std::vector<SmallSet>{SmallSet::of({0}), SmallSet::of({1}), SmallSet::of({2})});
  auto hfree = hyperplanes(free_matroid(3));
  CHECK(hfree.size() == 3);
  for (const auto& h : hfree) CHECK(h.count() == 2);
  // A triangle's hyperplanes are its single edges.
  auto htri = hyperplanes(graphic_matroid(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(htri.size() == 3);
  for (const auto& h : htri) CHECK(h.count() == 1);
  CHECK(hyperplanes(rank_zero_matroid(3)).empty());
}

TEST_CASE("perfect hyperplane collections complement perfect dual circuits") {
  for (const Matroid& k : {uniform_matroid(2, 3), uniform_matroid(2, 4), k4(), free_matroid(4)}) {
    HyperplaneSpace hs = hyperplane_space(k, rank_zero_matroid(static_cast<int>(hyperplanes(k).size())));
    // Fast enumeration as sets of hyperplane sets.
    std::set<std::set<SmallSet>> fast;
    for (const auto& coll : enumerate_perfect_hyperplanes(hs)) {
      std::set<SmallSet> sets;
      coll.for_each([&](int i) { sets.insert(hs.sets[i]); });
      fast.insert(std::move(sets));
    }
    // Independent route: perfect circuit collections of the dual, mapped by
    // complement.
    Matroid kd = dual(k);
    CircuitFamily dual_family = circuit_family(kd);
    std::set<std::set<SmallSet>> expected;
    for (const auto& coll : enumerate_perfect(dual_family)) {
      std::set<SmallSet> sets;
      coll.for_each([&](int i) { sets.insert(k.ground() - dual_family.sets[i]); });
      expected.insert(std::move(sets));
    }
    CHECK(fast == expected);
    // And the membership test agrees pointwise.
    std::uint64_t total = std::uint64_t{1} << hs.size();
    if (hs.size() <= 10) {
      for (std::uint64_t x = 0; x < total; ++x) {
        SmallSet members = SmallSet::from_index(x);
        std::set<SmallSet> as_sets;
        members.for_each([&](int i) { as_sets.insert(hs.sets[i]); });
        CHECK(is_perfect_hyperplanes(hs, members) == (fast.count(as_sets) > 0));
      }
    }
  }
}

TEST_CASE("perfect hyperplane examples") {
  Matroid u23 = uniform_matroid(2, 3);
  HyperplaneSpace hs = hyperplane_space(u23, rank_zero_matroid(3));
  CHECK(is_perfect_hyperplanes(hs, SmallSet{}));
  CHECK(is_perfect_hyperplanes(hs, SmallSet::of({0, 1})));
  CHECK_FALSE(is_perfect_hyperplanes(hs, SmallSet::of({0, 1, 2})));
}

TEST_CASE("projection formula and verdicts") {
  Matroid u23 = uniform_matroid(2, 3);
  HyperplaneSpace hs = hyperplane_space(u23, uniform_matroid(1, 3));
  CHECK(satisfies_dual_star(hs).pass);
  Matroid projected = project(hs);
  projected.materialize();
  CHECK(projected.table() == uniform_matroid(1, 3).materialize().table());
  CHECK(is_quotient(projected, u23).pass);
  CHECK(duality_bridge(hs).pass);

  // Rank-0 space keeps the base.
  HyperplaneSpace flat = hyperplane_space(u23, rank_zero_matroid(3));
  Matroid same = project(flat);
  same.materialize();
  CHECK(same.table() == u23.materialize().table());

  // The free space on three hyperplanes fails the dual closure condition.
  HyperplaneSpace bad = hyperplane_space(u23, free_matroid(3));
  StarReport rep = satisfies_dual_star(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.collection == SmallSet::of({0, 1}));
  CHECK(rep.circuit == 2);
  CHECK_THROWS_AS(project(bad), ConstructionError);
}

TEST_CASE("linear subclasses and elementary projections") {
  Matroid u23 = uniform_matroid(2, 3);
  auto hyps = hyperplanes(u23);
  CHECK(is_linear_subclass(u23, hyps, SmallSet::of({0})).pass);
  CHECK(is_linear_subclass(u23, hyps, SmallSet::first_n(3)).pass);
  // Two singleton hyperplanes meet in rank r-2 and pin the third.
  LinearClassReport bad = is_linear_subclass(u23, hyps, SmallSet::of({0, 1}));
  CHECK_FALSE(bad.pass);
  CHECK_THROWS_AS(crapo(u23, SmallSet::of({0, 1})), ConstructionError);

  Matroid kd = dual(k4());
  auto hd = hyperplanes(kd);
  SmallSet subclass;
  for (std::size_t i = 0; i < hd.size(); ++i) {
    if (hd[i].count() == 2) subclass.set(static_cast<int>(i));
  }
  REQUIRE(is_linear_subclass(kd, hd, subclass).pass);
  Matroid projected = crapo(kd, subclass);
  CHECK(projected.rank() == kd.rank() - 1);
  CHECK(check_rank_axioms(projected).pass);
  CHECK(is_quotient(projected, kd).pass);
  // Two-case formula, directly.
  std::uint64_t total = std::uint64_t{1} << kd.size();
  for (std::uint64_t x = 0; x < total; ++x) {
    SmallSet s = SmallSet::from_index(x);
    bool all_in = true;
    for (std::size_t h = 0; h < hd.size() && all_in; ++h) {
      if (s.subset_of(hd[h]) && !subclass.test(static_cast<int>(h))) all_in = false;
    }
    CHECK(projected.rank(s) == kd.rank(s) - (all_in ? 1 : 0));
  }
}

TEST_CASE("dual and primal closure conditions agree under complement transport") {
  struct Case {
    Matroid k;
    Matroid n;
  };
  std::vector<Case> cases = {
      {uniform_matroid(2, 3), uniform_matroid(1, 3)},
      {uniform_matroid(2, 3), free_matroid(3)},
      {uniform_matroid(2, 4), uniform_matroid(2, 4)},
      {free_matroid(4), rank_zero_matroid(4)},
  };
  for (const auto& c : cases) {
    HyperplaneSpace hs = hyperplane_space(c.k, c.n);
    bool dual_side = satisfies_dual_star(hs).pass;
    // Transport the space onto the dual's circuits by complement.
    Matroid kd = dual(c.k);
    CircuitFamily family = circuit_family(kd);
    std::vector<int> map(family.size());
    for (int i = 0; i < family.size(); ++i) {
      SmallSet complement = c.k.ground() - family.sets[i];
      auto it = std::lower_bound(hs.sets.begin(), hs.sets.end(), complement);
      REQUIRE(it != hs.sets.end());
      map[i] = static_cast<int>(it - hs.sets.begin());
    }
    Matroid n = c.n;
    Matroid transported = oracle_matroid(
        family.size(),
        [map, n](const SmallSet& s) {
          SmallSet mapped;
          s.for_each([&](int i) { mapped.set(map[i]); });
          return n.rank(mapped);
        },
        "transport");
    bool primal_side = satisfies_star(CircuitSpace{family, transported}).pass;
    CHECK(dual_side == primal_side);
  }
}

TEST_CASE("bridge catches disagreement") {
  // Sanity: the bridge on a valid pair passes; the report machinery is
  // exercised against a deliberately wrong direct table elsewhere via the
  // runner test.
  Matroid u24 = uniform_matroid(2, 4);
  HyperplaneSpace hs = hyperplane_space(u24, uniform_matroid(2, 4));
  CHECK(satisfies_dual_star(hs).pass);
  CHECK(duality_bridge(hs).pass);
}
