#include <random>
#include <set>

#include "doctest.h"
#include "liftforge/bitset.hpp"

using liftforge::SmallSet;

TEST_CASE("basic set algebra") {
  SmallSet a = SmallSet::of({0, 2, 100, 319});
  CHECK(a.count() == 4);
  CHECK(a.test(100));
  CHECK_FALSE(a.test(1));
  CHECK(a.lowest() == 0);
  CHECK(a.elements() == std::vector<int>{0, 2, 100, 319});
  CHECK(a.to_string() == "{0,2,100,319}");

  SmallSet b = SmallSet::of({2, 100});
  CHECK(b.subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK((a - b) == SmallSet::of({0, 319}));
  CHECK((a & b) == b);
  CHECK((a | b) == a);
}

TEST_CASE("first_n crosses word boundaries") {
  CHECK(SmallSet::first_n(0).empty());
  CHECK(SmallSet::first_n(64).count() == 64);
  CHECK(SmallSet::first_n(65).count() == 65);
  CHECK(SmallSet::first_n(200).count() == 200);
  CHECK(SmallSet::first_n(64).test(63));
  CHECK_FALSE(SmallSet::first_n(64).test(64));
}

TEST_CASE("canonical order is the bitset-integer order") {
  // For sets inside one word this is numeric order of the index.
  CHECK(SmallSet::of({0}) < SmallSet::of({1}));
  CHECK(SmallSet::of({1}) < SmallSet::of({0, 1}));
  CHECK(SmallSet::of({0, 1}) < SmallSet::of({2}));
  // Higher words dominate.
  CHECK(SmallSet::of({63}) < SmallSet::of({64}));
  CHECK(SmallSet::of({0, 1, 2, 63}) < SmallSet::of({64}));
}

TEST_CASE("random ops agree with std::set") {
  std::mt19937 rng(7);
  std::set<int> ref;
  SmallSet s;
  for (int step = 0; step < 2000; ++step) {
    int e = static_cast<int>(rng() % SmallSet::kMaxElements);
    if (rng() & 1) {
      s.set(e);
      ref.insert(e);
    } else {
      s.reset(e);
      ref.erase(e);
    }
    CHECK(s.count() == static_cast<int>(ref.size()));
    if (step % 100 == 0) {
      CHECK(s.elements() == std::vector<int>(ref.begin(), ref.end()));
    }
  }
}
