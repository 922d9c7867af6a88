#include <doctest.h>

#include "fixtures.hpp"
#include "gil/enumerate.hpp"
#include "gil/errors.hpp"
#include "gil/gamma_semigroup.hpp"

using namespace gil;
using namespace gil::testing;

TEST_CASE("trivial and null structures validate") {
  const GammaSemigroup t = t1();
  CHECK(t.n() == 1);
  CHECK(t.s_prod(0, 0, 0) == 0);
  CHECK(t.g_prod(0, 0, 0) == 0);
  CHECK(t.is_commutative().commutative);

  const GammaSemigroup n = n3();
  CHECK(n.s_prod(1, 0, 2) == 0);
  CHECK(n.g_prod(0, 2, 0) == 0);
  CHECK(n.is_commutative().commutative);
}

TEST_CASE("right projection validates and is not commutative") {
  const GammaSemigroup r = r2();
  CHECK(r.s_prod(0, 0, 1) == 1);
  CHECK(r.g_prod(0, 1, 0) == 0);
  const CommutativityResult c = r.is_commutative();
  CHECK_FALSE(c.commutative);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->a == 0);
  CHECK(c.witness->gamma == 0);
  CHECK(c.witness->b == 1);
}

TEST_CASE("the AND table fails the first chain at (1,0,1)") {
  // f(a,b) = a AND b: (1.0).1 = 0 while the middle form gives f(1,1) = 1.
  try {
    GammaSemigroup::build(2, 1, {0, 0, 0, 1}, {0, 0});
    FAIL("expected AssociativityError");
  } catch (const AssociativityError& e) {
    CHECK(e.chain == 1);
    CHECK(e.tuple[0] == 1);  // a
    CHECK(e.tuple[1] == 0);  // b
    CHECK(e.tuple[2] == 1);  // c
    CHECK(e.lhs == 0);
    CHECK(e.rhs == 1);
  }
}

TEST_CASE("shape and range validation") {
  CHECK_THROWS_AS(GammaSemigroup::build(2, 1, {0, 0, 0}, {0, 0}), ShapeError);
  CHECK_THROWS_AS(GammaSemigroup::build(0, 1, {}, {}), ShapeError);
  CHECK_THROWS_AS(GammaSemigroup::build(2, 1, {0, 0, 0, 5}, {0, 0}), RangeError);
  CHECK_THROWS_AS(GammaSemigroup::build(1, 1, {0}, {3}), RangeError);
  CHECK_THROWS_AS(GammaSemigroup::build(1, 1, {0}, {0}, {"a", "b"}), LengthError);

  const GammaSemigroup r = r2();
  CHECK_THROWS_AS(r.s_prod(3, 0, 0), RangeError);
  CHECK_THROWS_AS(r.s_prod(0, 1, 0), RangeError);
  CHECK_THROWS_AS(r.g_prod(0, 2, 0), RangeError);
}

TEST_CASE("iterated powers") {
  const GammaSemigroup n = n3();
  const GammaSemigroup r = r2();
  for (int x = 0; x < 3; ++x) CHECK(n.iterate_power(x, 0, 0) == x);
  CHECK(n.iterate_power(1, 0, 2) == 0);
  CHECK(r.iterate_power(0, 0, 3) == 0);
  CHECK(r.iterate_power(1, 0, 3) == 1);
  CHECK_THROWS_AS(n.iterate_power(0, 0, -1), RangeError);
}

TEST_CASE("power evaluation does not depend on nesting") {
  StructureQuery q;
  q.n_max = 2;
  q.m_max = 2;
  for (const GammaSemigroup& g : enumerate_structures(q)) {
    for (int x = 0; x < g.n(); ++x)
      for (int al = 0; al < g.m(); ++al)
        for (int k = 0; k <= 4; ++k) {
          CHECK(g.iterate_power(x, al, k) == g.iterate_power_left(x, al, k));
        }
  }
}

TEST_CASE("gamma orbits") {
  CHECK(t1().gamma_orbit(0, 0) == CrispSubset::of(1, {0}));
  CHECK(n3().gamma_orbit(1, 2) == CrispSubset::of(3, {0}));
  CHECK(r2().gamma_orbit(0, 1) == CrispSubset::of(2, {1}));

  StructureQuery q;
  q.n_max = 2;
  q.m_max = 2;
  for (const GammaSemigroup& g : enumerate_structures(q)) {
    for (int x = 0; x < g.n(); ++x)
      for (int y = 0; y < g.n(); ++y) {
        const CrispSubset orbit = g.gamma_orbit(x, y);
        CHECK_FALSE(orbit.is_empty());
        CHECK(orbit.universe_size() == g.n());
      }
  }
}

TEST_CASE("labels are cosmetic") {
  const GammaSemigroup n =
      GammaSemigroup::build(3, 1, std::vector<int>(9, 0), std::vector<int>(3, 0),
                            {"0", "a", "b"});
  CHECK(n.s_name(1) == "a");
  CHECK(n.g_name(0) == "0");
  CHECK(r2().s_name(1) == "1");
}
