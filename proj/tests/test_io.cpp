#include <doctest.h>

#include "fixtures.hpp"
#include "gil/errors.hpp"
#include "gil/io.hpp"

using namespace gil;
using namespace gil::testing;

TEST_CASE("structure JSON round-trips") {
  const std::string text =
      R"({"n":3,"m":1,"s_table":[[[0,0,0]],[[0,0,0]],[[0,0,0]]],"g_table":[[[0],[0],[0]]],"s_labels":["0","a","b"]})";
  const GammaSemigroup g = structure_from_json(parse_json_text(text, "test"));
  CHECK(g.n() == 3);
  CHECK(g.m() == 1);
  CHECK(g.s_prod(1, 0, 2) == 0);
  CHECK(g.s_name(1) == "a");
  const auto j = structure_to_json(g);
  const GammaSemigroup back = structure_from_json(j);
  CHECK(back == g);
  CHECK(back.s_labels() == g.s_labels());
  CHECK(structure_to_json(back) == j);
}

TEST_CASE("structure JSON rejects malformed payloads") {
  CHECK_THROWS_AS(structure_from_json(parse_json_text(R"({"n":2,"m":1})", "t")), ParseError);
  CHECK_THROWS_AS(
      structure_from_json(parse_json_text(
          R"({"n":2,"m":1,"s_table":[[[0,0]]],"g_table":[[[0],[0]]]})", "t")),
      ShapeError);  // ragged s_table
  CHECK_THROWS_AS(
      structure_from_json(parse_json_text(
          R"({"n":2,"m":1,"s_table":[[[0,7]],[[0,0]]],"g_table":[[[0],[0]]]})", "t")),
      RangeError);
  CHECK_THROWS_AS(
      structure_from_json(parse_json_text(
          R"({"n":2,"m":1,"s_table":[[[0,0]],[[0,1]]],"g_table":[[[0],[0]]]})", "t")),
      AssociativityError);  // the AND table
  CHECK_THROWS_AS(parse_json_text("{oops", "t"), ParseError);
}

TEST_CASE("IF subset JSON round-trips with exact grades") {
  const IFSubset a = ifs_from_json(
      parse_json_text(R"({"mu":["1","0.2","3/10"],"nu":["0","1/2","2/5"]})", "t"));
  CHECK(a == a3());
  CHECK(ifs_from_json(ifs_to_json(a)) == a);
  // Whole JSON integers are accepted, binary floats are not.
  CHECK(ifs_from_json(parse_json_text(R"({"mu":[1,0],"nu":[0,1]})", "t")).mu(0) == Grade::one());
  CHECK_THROWS_AS(ifs_from_json(parse_json_text(R"({"mu":[0.2],"nu":[0]})", "t")), ParseError);
  CHECK_THROWS_AS(ifs_from_json(parse_json_text(R"({"mu":["1"]})", "t")), ParseError);
  CHECK_THROWS_AS(ifs_from_json(parse_json_text(R"({"mu":["3/2"],"nu":["0"]})", "t")),
                  GradeRangeError);
  CHECK_THROWS_AS(ifs_from_json(parse_json_text(R"({"mu":["3/4"],"nu":["1/2"]})", "t")),
                  ConstraintError);
}

TEST_CASE("subset JSON") {
  const CrispSubset m = subset_from_json(parse_json_text(R"({"set":[0,2]})", "t"), 3);
  CHECK(m == CrispSubset::of(3, {0, 2}));
  CHECK(subset_from_json(subset_to_json(m), 3) == m);
  CHECK_THROWS_AS(subset_from_json(parse_json_text(R"({"set":[5]})", "t"), 3), RangeError);
  CHECK_THROWS_AS(subset_from_json(parse_json_text(R"({"elems":[0]})", "t"), 3), ParseError);
}
