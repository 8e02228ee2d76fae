#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "liftforge/errors.hpp"
#include "liftforge/gain.hpp"

using namespace liftforge;

TEST_CASE("edge layout of fully labeled complete graphs") {
  CHECK(GainGraph::complete(3, FiniteGroup::named("Z2")).edge_count() == 6);
  CHECK(GainGraph::complete(3, FiniteGroup::named("Z2xZ2")).edge_count() == 12);
  CHECK(GainGraph::complete(4, FiniteGroup::named("Z3")).edge_count() == 18);
  CHECK_THROWS_AS(GainGraph::complete(2, FiniteGroup::named("Z2")), ParseError);

  GainGraph g = GainGraph::complete(3, FiniteGroup::named("Z3"));
  for (int i = 0; i < g.edge_count(); ++i) {
    const GainEdge& e = g.edge(i);
    CHECK(g.edge_index(e.u, e.v, e.label) == i);
  }
  CHECK(g.edges_labeled({0}).count() == 3);
  CHECK(g.edges_labeled({0, 1, 2}) == SmallSet::first_n(9));
  CHECK(g.edges_labeled({}).empty());
}

TEST_CASE("cycle enumeration matches the cycle matroid circuits") {
  struct Case {
    int n;
    std::string group;
    int expected;
  };
  for (const Case& c : {Case{3, "Z2", 11}, Case{3, "trivial", 1}, Case{3, "Z2xZ2", 82},
                        Case{4, "Z2", 86}}) {
    GainGraph g = GainGraph::complete(c.n, FiniteGroup::named(c.group));
    auto cycles = enumerate_cycles(g);
    CHECK(static_cast<int>(cycles.size()) == c.expected);
    // The independent oracle: circuits of the graphic matroid.
    auto circ = g.cycle_matroid().circuits();
    REQUIRE(circ.size() == cycles.size());
    for (std::size_t i = 0; i < circ.size(); ++i) CHECK(circ[i] == cycles[i].edges);
  }
}

TEST_CASE("walk values and balance") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GainGraph g = GainGraph::complete(3, s3);
  auto cycles = enumerate_cycles(g);
  for (const auto& c : cycles) {
    auto vals = phi_values(g, c);
    // Closed under inverses.
    for (int v : vals) {
      CHECK(std::binary_search(vals.begin(), vals.end(), s3.inverse(v)));
    }
    if (c.length() == 2) CHECK_FALSE(is_balanced(g, c));
  }

  // Abelian labels give at most two walk values.
  GainGraph gz4 = GainGraph::complete(3, FiniteGroup::named("Z4"));
  for (const auto& c : enumerate_cycles(gz4)) {
    CHECK(phi_values(gz4, c).size() <= 2);
  }

  // Over Z2 exactly half of the triangles balance (label sum zero).
  GainGraph gz2 = GainGraph::complete(3, FiniteGroup::named("Z2"));
  int balanced_triangles = 0, triangles = 0;
  for (const auto& c : enumerate_cycles(gz2)) {
    if (c.length() != 3) continue;
    ++triangles;
    balanced_triangles += is_balanced(gz2, c);
  }
  CHECK(triangles == 8);
  CHECK(balanced_triangles == 4);

  // A specific digon value set over a non-abelian group.
  int a = 1, b = 2;
  Cycle digon;
  digon.vertices = {0, 1};
  digon.edge_ids = {g.edge_index(0, 1, a), g.edge_index(0, 1, b)};
  digon.edges = SmallSet::of({digon.edge_ids[0], digon.edge_ids[1]});
  auto vals = phi_values(g, digon);
  std::set<int> expected = {s3.compose(a, s3.inverse(b)), s3.compose(b, s3.inverse(a)),
                            s3.compose(s3.inverse(b), a), s3.compose(s3.inverse(a), b)};
  CHECK(std::set<int>(vals.begin(), vals.end()) == expected);
}

TEST_CASE("triangle walk values follow the low-to-high edge orientation") {
  // Edges are oriented from the smaller vertex, so a walk 1->2->3->1 adds the
  // labels of 1-2 and 2-3 and subtracts the label of 1-3.
  GainGraph g = GainGraph::complete(3, FiniteGroup::named("Z3"));
  auto make_triangle = [&](int a12, int a23, int a13) {
    Cycle c;
    c.vertices = {0, 1, 2};
    c.edge_ids = {g.edge_index(0, 1, a12), g.edge_index(1, 2, a23), g.edge_index(0, 2, a13)};
    for (int e : c.edge_ids) c.edges.set(e);
    return c;
  };
  CHECK(is_balanced(g, make_triangle(1, 1, 2)));   // 1 + 1 - 2 = 0
  CHECK(is_balanced(g, make_triangle(1, 2, 0)));   // 1 + 2 - 0 = 0
  Cycle unbal = make_triangle(1, 1, 1);            // 1 + 1 - 1 = 1
  CHECK_FALSE(is_balanced(g, unbal));
  CHECK(phi_values(g, unbal) == std::vector<int>{1, 2});
}

TEST_CASE("perfect-collection search agrees with brute force on a multigraph") {
  GainGraph g = GainGraph::complete(3, FiniteGroup::named("Z2"));
  CircuitFamily family = circuit_family(g.cycle_matroid());
  REQUIRE(family.size() == 11);
  PerfectEnumOptions opts;
  opts.max_circuits = 11;
  auto fast = enumerate_perfect(family, opts);
  std::vector<SmallSet> brute;
  for (std::uint64_t s = 0; s < (1u << 11); ++s) {
    if (is_perfect(family, SmallSet::from_index(s))) brute.push_back(SmallSet::from_index(s));
  }
  CHECK(fast == brute);
}

TEST_CASE("balanced-cycle lifts") {
  Matroid lg32 = lg_matroid(GainGraph::complete(3, FiniteGroup::named("Z2")));
  CHECK(lg32.size() == 6);
  CHECK(lg32.rank() == 3);

  GainGraph triv = GainGraph::complete(3, FiniteGroup::named("trivial"));
  Matroid lg_triv = lg_matroid(triv);
  CHECK(isomorphism(lg_triv, triv.cycle_matroid()).has_value());

  Matroid lg33 = lg_matroid(GainGraph::complete(3, FiniteGroup::named("Z3")));
  CHECK(lg33.size() == 9);
  CHECK(lg33.rank() == 3);
}

TEST_CASE("label projections chunk coordinates into subfield vectors") {
  // One block of two bits: the single point of a projective line over GF(4).
  LabelProjection whole(2, 2, 2);
  CHECK(whole.geometry().points.cols() == 1);
  FiniteGroup z22 = FiniteGroup::abelian({2, 2});
  CHECK(whole.point_of(z22, z22.from_coords({1, 0})) == 0);

  // Identity chunking over GF(2).
  LabelProjection bits(2, 2, 1);
  CHECK(bits.geometry().points.cols() == 3);
  int alpha = z22.from_coords({1, 1});
  CHECK(bits.vector_of(z22, alpha) == std::vector<int>{1, 1});
  CHECK(bits.point_of(z22, alpha) ==
        projective_point_index(bits.geometry().points, {1, 1}));

  // Opposite values land on the same point.
  LabelProjection mod3(3, 2, 1);
  FiniteGroup z33 = FiniteGroup::abelian({3, 3});
  int g1 = z33.from_coords({2, 1});
  int g2 = z33.inverse(g1);
  CHECK(z33.coords(g2) == std::vector<int>{1, 2});
  CHECK(mod3.point_of(z33, g1) == mod3.point_of(z33, g2));

  CHECK_THROWS_AS(LabelProjection(2, 4, 3), ParseError);
  CHECK_THROWS(bits.point_of(z22, z22.identity()));
}

TEST_CASE("coordinate chunking is an additive bijection, exhaustively") {
  for (auto [p, j, i] : std::vector<std::array<int, 3>>{
           {2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {3, 2, 2}, {2, 4, 2}, {2, 12, 4}}) {
    LabelProjection proj(p, j, i);
    FiniteGroup zpj = FiniteGroup::abelian(std::vector<int>(j, p));
    const Field& f = proj.subfield();
    std::vector<std::vector<int>> image(zpj.order());
    for (int a = 0; a < zpj.order(); ++a) image[a] = proj.vector_of(zpj, a);
    std::set<std::vector<int>> distinct(image.begin(), image.end());
    CHECK(static_cast<int>(distinct.size()) == zpj.order());
    long long violations = 0;
    std::vector<int> sum(image[0].size());
    for (int a = 0; a < zpj.order(); ++a) {
      for (int b = 0; b < zpj.order(); ++b) {
        int ab = zpj.compose(a, b);
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = f.add(image[a][t], image[b][t]);
        violations += !(image[ab] == sum);
      }
    }
    CHECK_MESSAGE(violations == 0, "chunking p=", p, " j=", j, " i=", i,
                  " additivity violations: ", violations);
  }
}

TEST_CASE("chunking choice: consecutive versus interleaved blocks") {
  // The library fixes consecutive coordinate blocks.  Any other isomorphism
  // works just as well for the construction; this records how an interleaved
  // chunking compares on Z_2^4 -> GF(4)^2 without making the outcome a
  // contract.
  LabelProjection consecutive(2, 4, 2);
  FiniteGroup z24 = FiniteGroup::abelian({2, 2, 2, 2});
  const Field& f4 = consecutive.subfield();
  auto interleaved = [&](int elem) {
    auto coords = z24.coords(elem);
    return std::vector<int>{f4.from_coeffs({coords[0], coords[2]}),
                            f4.from_coeffs({coords[1], coords[3]})};
  };
  // Both are additive bijections.
  std::set<std::vector<int>> seen;
  for (int a = 0; a < 16; ++a) seen.insert(interleaved(a));
  CHECK(seen.size() == 16);
  int agreements = 0;
  for (int a = 1; a < 16; ++a) {
    std::vector<int> c = consecutive.vector_of(z24, a);
    if (interleaved(a) == c) ++agreements;
    for (int b = 1; b < 16; ++b) {
      auto ia = interleaved(a), ib = interleaved(b), iab = interleaved(z24.compose(a, b));
      std::vector<int> sum = {f4.add(ia[0], ib[0]), f4.add(ia[1], ib[1])};
      REQUIRE(iab == sum);
    }
  }
  MESSAGE("interleaved chunking agrees with consecutive on ", agreements, " of 15 labels");
}

TEST_CASE("projective cycle spaces") {
  GainGraph g = GainGraph::complete(3, FiniteGroup::abelian({2, 2}));
  LabelProjection proj(2, 2, 1);
  ProjectiveGeometry pg = projective_geometry(1, Field::gf(2));

  CircuitSpace ns = pg_circuit_space(g, proj, pg.matroid);
  CHECK(ns.n.size() == 82);
  CHECK(ns.n.rank() == 2);
  // Balanced cycles are loops, unbalanced ones are not.
  auto cycles = enumerate_cycles(g);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    bool loop = ns.n.rank(SmallSet::single(static_cast<int>(i))) == 0;
    CHECK(loop == is_balanced(g, cycles[i]));
  }

  // Rank-0 point matroid collapses the lift to the cycle matroid.
  CircuitSpace flat = pg_circuit_space(g, proj, rank_zero_matroid(3));
  Matroid same = lift(g.cycle_matroid(), flat, /*check=*/true,
                      PerfectEnumOptions{SmallSet::kMaxElements, 4000000});
  same.materialize();
  CHECK(same.table() == g.cycle_matroid().materialize().table());

  CHECK_THROWS_AS(pg_circuit_space(g, proj, rank_zero_matroid(5)), ValidationError);
}

TEST_CASE("whole-block projection reproduces the elementary lift") {
  // With a single block (divisor = exponent) the projective geometry is one
  // point, so the cycle space has rank one with the balanced cycles as loops
  // and the lift must coincide with the balanced-class elementary lift.
  GainGraph g = GainGraph::complete(3, FiniteGroup::abelian({2, 2}));
  LabelProjection whole(2, 2, 2);
  CircuitSpace ns = pg_circuit_space(g, whole, free_matroid(1));
  CHECK(ns.n.rank() == 1);
  PerfectEnumOptions wide;
  wide.max_circuits = SmallSet::kMaxElements;
  Matroid lifted = lift(g.cycle_matroid(), ns, /*check=*/true, wide);
  lifted.materialize();
  CHECK(lifted.table() == lg_matroid(g).table());
}

TEST_CASE("labeled lifts respect the labeling") {
  GainGraph g = GainGraph::complete(3, FiniteGroup::named("Z2"));
  Matroid lg = lg_matroid(g);
  CHECK(class_membership(lg, g).pass);
  CHECK_FALSE(class_membership(g.cycle_matroid(), g).pass);
  CHECK_THROWS_AS(class_membership(free_matroid(3), g), ValidationError);
}

TEST_CASE("label-class diagnostics on elementary lifts") {
  for (const char* name : {"Z2", "Z4"}) {
    GainGraph g = GainGraph::complete(3, FiniteGroup::named(name));
    TildeReport rep = tilde_relation(lg_matroid(g), g);
    CHECK(rep.local.pass);
    CHECK(rep.generated.pass);
    CHECK(rep.equivalence.pass);
    CHECK(rep.class_rank.pass);
    CHECK(rep.subgroup.pass);
    // Elementary lifts relate every pair of labels: one class.
    REQUIRE(rep.classes.size() == 1);
    CHECK(static_cast<int>(rep.classes[0].size()) == g.group().order() - 1);
  }
  GainGraph g = GainGraph::complete(3, FiniteGroup::named("Z2"));
  CHECK_THROWS_AS(tilde_relation(g.cycle_matroid(), g), ConstructionError);
}
