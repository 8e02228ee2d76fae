#include "doctest.h"
#include "liftforge/errors.hpp"
#include "liftforge/spec_io.hpp"

using namespace liftforge;

TEST_CASE("matroid definitions parse") {
  NamedMatroid u24 = parse_matroid_text("matroid u24\nuniform r=2 n=4\n");
  CHECK(u24.name == "u24");
  CHECK(u24.matroid.rank() == 2);

  NamedMatroid tri = parse_matroid_text("# a triangle with a doubled edge\n"
                                        "matroid tri\n"
                                        "graphic n=3 edges=1-2,1-2,1-3\n");
  CHECK(tri.matroid.size() == 3);
  CHECK(tri.matroid.rank() == 2);
  CHECK(tri.matroid.circuits().size() == 1);

  NamedMatroid lin = parse_matroid_text("matroid ones\nlinear p=2 k=1 rows=1 cols=4 data=1,1,1,1\n");
  lin.matroid.materialize();
  CHECK(lin.matroid.table() == uniform_matroid(1, 4).materialize().table());

  NamedMatroid bas = parse_matroid_text("matroid b\nbases rank=2 sets={0,1},{0,2},{1,2}\n");
  CHECK(bas.matroid.rank() == 2);
  CHECK(bas.matroid.size() == 3);

  CHECK(parse_matroid_text("matroid z\nzero n=3\n").matroid.rank() == 0);
  CHECK(parse_matroid_text("matroid f\nfree n=3\n").matroid.rank() == 3);
  // The name header is optional for inline use.
  CHECK(parse_matroid_text("uniform r=1 n=2").matroid.rank() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_matroid_text("matroid x\nuniform r=5 n=3\n"),
                       doctest::Contains("r > n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text(""), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("matroid x\nwhatever n=3\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("matroid x\ngraphic n=2 edges=1-3\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("matroid x\nuniform r=2 n=4\nextra\n"), ParseError);
  // Valid syntax, invalid mathematics.
  CHECK_THROWS_AS(parse_matroid_text("matroid x\nbases rank=2 sets={0,1},{2,3}\n"),
                  ValidationError);
}

TEST_CASE("show output is deterministic and complete") {
  NamedMatroid u24 = parse_matroid_text("matroid u24\nuniform r=2 n=4\n");
  std::string a = show_matroid(u24);
  std::string b = show_matroid(u24);
  CHECK(a == b);
  CHECK(a.find("ground 4") != std::string::npos);
  CHECK(a.find("rank 2") != std::string::npos);
  CHECK(a.find("circuits 4") != std::string::npos);
  CHECK(a.find("{0,1,2}") != std::string::npos);
  CHECK(a.find("table-hash 0x") != std::string::npos);
}

TEST_CASE("bases lines round-trip") {
  Matroid m = graphic_matroid(3, {{0, 1}, {0, 2}, {1, 2}});
  std::string line = bases_line(m);
  NamedMatroid parsed = parse_matroid_text("matroid rt\n" + line + "\n");
  m.materialize();
  parsed.matroid.materialize();
  CHECK(parsed.matroid.table() == m.table());

  // A loop above the last basis element survives through the n= key.
  Matroid loopy = graphic_matroid(2, {{0, 1}, {1, 1}});
  NamedMatroid parsed2 = parse_matroid_text("matroid rt2\n" + bases_line(loopy) + "\n");
  loopy.materialize();
  parsed2.matroid.materialize();
  CHECK(parsed2.matroid.table() == loopy.table());
  CHECK_THROWS_AS(parse_matroid_text("matroid bad\nbases rank=1 n=1 sets={0},{1}\n"), ParseError);
}

TEST_CASE("group files parse and validate") {
  FiniteGroup z2 = parse_group_text("group z2\norder 2\ntable\n0 1\n1 0\n");
  CHECK(z2.order() == 2);
  CHECK_THROWS_AS(parse_group_text("group bad\norder 2\ntable\n0 1\n1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_group_text("order 2\ntable\n0 1\n1 0\n"), ParseError);
  CHECK(load_group("Z2xZ2").order() == 4);
}

TEST_CASE("representations load from linear specs only") {
  Representation rep = load_representation("linear p=2 k=1 rows=1 cols=3 data=1,1,1");
  CHECK(rep.matroid.rank() == 1);
  CHECK_THROWS_AS(load_representation("uniform r=1 n=3"), ParseError);
  CHECK_THROWS_AS(load_matroid("/no/such/file.matroid"), ParseError);
}
