#include "doctest.h"
#include "liftforge/errors.hpp"
#include "liftforge/field.hpp"

using namespace liftforge;

TEST_CASE("prime field arithmetic") {
  Field f2 = Field::gf(2);
  CHECK(f2.add(1, 1) == 0);
  Field f3 = Field::gf(3);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.mul(2, 2) == 1);
}

TEST_CASE("GF(4) reduces by x^2+x+1") {
  Field f4 = Field::gf(2, 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1});
  int x = f4.from_coeffs({0, 1});
  // x*x = x+1 under the modulus.
  CHECK(f4.mul(x, x) == f4.from_coeffs({1, 1}));
}

TEST_CASE("the modulus is the least irreducible in (c0..ck-1) order") {
  // Pinned so representations and point lists never drift across builds.
  CHECK(Field::gf(2, 3).modulus() == std::vector<int>{1, 0, 1});  // x^3+x^2+1
  CHECK(Field::gf(3, 2).modulus() == std::vector<int>{1, 0});     // x^2+1
  CHECK(Field::gf(2, 4).modulus() == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("field axioms hold exhaustively up to order 256") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 4}, {2, 8}}) {
    Field f = Field::gf(p, k);
    int q = f.q();
    long long violations = 0;
    for (int a = 0; a < q; ++a) {
      violations += f.add(a, f.neg(a)) != 0;
      if (a != 0) violations += f.mul(a, f.inv(a)) != 1;
      for (int b = 0; b < q; ++b) {
        violations += f.add(a, b) != f.add(b, a);
        violations += f.mul(a, b) != f.mul(b, a);
        for (int c = 0; c < q; ++c) {
          violations += f.add(f.add(a, b), c) != f.add(a, f.add(b, c));
          violations += f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c));
          violations += f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK_MESSAGE(violations == 0, "GF(", q, ") axiom violations: ", violations);
  }
}

TEST_CASE("field capacity and bad input") {
  CHECK_THROWS_AS(Field::gf(2, 9), CapacityError);
  CHECK_THROWS_AS(Field::gf(4, 1), ParseError);
  CHECK_THROWS(Field::gf(3).inv(0));
}

TEST_CASE("matrix rank by row reduction") {
  Field f2 = Field::gf(2);
  FieldMatrix id3(f2, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(matrix_rank(id3) == 3);
  FieldMatrix zero(f2, 2, 3);
  CHECK(matrix_rank(zero) == 0);
  FieldMatrix a(f2, 2, 3, {1, 0, 1, 0, 1, 1});
  CHECK(matrix_rank(a) == 2);
  CHECK(matrix_rank(a, SmallSet::of({2})) == 1);
}

TEST_CASE("kernel vectors with exact support") {
  Field f2 = Field::gf(2);
  FieldMatrix ones(f2, 1, 4, {1, 1, 1, 1});
  auto v = nullspace_vector(ones, SmallSet::of({0, 1}));
  REQUIRE(v.has_value());
  CHECK(*v == std::vector<int>{1, 1, 0, 0});
  // Independent columns have no kernel vector.
  FieldMatrix id2(f2, 2, 2, {1, 0, 0, 1});
  CHECK_FALSE(nullspace_vector(id2, SmallSet::of({0, 1})).has_value());
  // A dependent support that is not a circuit can still fail (zero entries
  // forced).
  CHECK_FALSE(nullspace_vector(ones, SmallSet::of({0, 1, 2})).has_value());
  FieldMatrix a(f2, 2, 3, {1, 0, 1, 0, 1, 1});
  auto w = nullspace_vector(a, SmallSet::of({0, 1, 2}));
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{1, 1, 1});
}

TEST_CASE("kernel vector canonical scaling") {
  Field f3 = Field::gf(3);
  FieldMatrix a(f3, 1, 3, {1, 2, 1});
  auto v = nullspace_vector(a, SmallSet::of({0, 1}));
  REQUIRE(v.has_value());
  CHECK((*v)[0] == 1);  // lowest-index nonzero scaled to 1
  CHECK(f3.add(f3.mul(1, (*v)[0]), f3.mul(2, (*v)[1])) == 0);
}

TEST_CASE("projective point lists") {
  Field f2 = Field::gf(2);
  FieldMatrix pg12 = projective_points(2, f2);
  CHECK(pg12.cols() == 3);
  // Lexicographic, first nonzero scaled to 1: (0,1), (1,0), (1,1).
  CHECK(pg12.column(0) == std::vector<int>{0, 1});
  CHECK(pg12.column(1) == std::vector<int>{1, 0});
  CHECK(pg12.column(2) == std::vector<int>{1, 1});
  CHECK(projective_points(3, f2).cols() == 7);
  CHECK(projective_points(2, Field::gf(2, 2)).cols() == 5);
}

TEST_CASE("every nonzero vector hits exactly one projective point") {
  for (auto [m, p, k] : std::vector<std::tuple<int, int, int>>{
           {2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {2, 2, 2}, {3, 3, 1}, {2, 2, 4}}) {
    Field f = Field::gf(p, k);
    FieldMatrix pts = projective_points(m, f);
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= f.q();
    std::vector<int> hits(pts.cols(), 0);
    for (long long code = 1; code < total; ++code) {
      std::vector<int> v(m);
      long long c = code;
      for (int i = m - 1; i >= 0; --i) {
        v[i] = static_cast<int>(c % f.q());
        c /= f.q();
      }
      hits[projective_point_index(pts, v)]++;
    }
    for (int h : hits) CHECK(h == f.q() - 1);
  }
}
