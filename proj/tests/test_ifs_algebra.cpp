#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gil/enumerate.hpp"
#include "gil/errors.hpp"
#include "gil/ifs.hpp"

using namespace gil;
using namespace gil::testing;

TEST_CASE("grades live in [0,1]") {
  CHECK(Grade::parse("1/2").value() == Rational(1, 2));
  CHECK(Grade::parse("0.2") == grade(1, 5));
  CHECK_THROWS_AS(Grade::parse("5/4"), GradeRangeError);
  CHECK_THROWS_AS(Grade::parse("-1/10"), GradeRangeError);
  CHECK(Grade::zero() < Grade::one());
}

TEST_CASE("IF subsets validate the pointwise constraint") {
  CHECK_NOTHROW(a3());
  CHECK_NOTHROW(IFSubset({grade(1)}, {grade(0)}));
  try {
    IFSubset({grade(3, 4)}, {grade(1, 2)});
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(e.index == 0);
  }
  CHECK_THROWS_AS(IFSubset({grade(1), grade(0)}, {grade(0)}), LengthError);
}

TEST_CASE("the IF order") {
  const IFSubset a = a3();
  const IFSubset top = constant_ifs(3, Grade::one(), Grade::zero());
  CHECK(ifs_leq(a, a));
  CHECK(ifs_leq(a, top));
  CHECK_FALSE(ifs_leq(top, a));
  CHECK_THROWS_AS(ifs_leq(a, b2()), LengthError);
}

TEST_CASE("the IF order is a partial order on the grid") {
  const std::vector<IFSubset> grid = enumerate_ifs(2, 2);
  for (const IFSubset& a : grid)
    for (const IFSubset& b : grid) {
      if (ifs_leq(a, b) && ifs_leq(b, a)) CHECK(a == b);
      for (const IFSubset& c : grid) {
        if (ifs_leq(a, b) && ifs_leq(b, c)) CHECK(ifs_leq(a, c));
      }
    }
}

TEST_CASE("family inf and sup") {
  const IFSubset a = a3();
  CHECK(family_inf({a}) == a);
  CHECK(family_sup({a}) == a);

  const IFSubset top1 = constant_ifs(1, Grade::one(), Grade::zero());
  const IFSubset bot1 = constant_ifs(1, Grade::zero(), Grade::one());
  CHECK(family_inf({top1, bot1}) == bot1);
  CHECK(family_sup({top1, bot1}) == top1);

  const IFSubset chi = characteristic(CrispSubset::of(3, {0, 1}));
  const IFSubset expected({grade(1), grade(1, 5), grade(0)}, {grade(0), grade(1, 2), grade(1)});
  CHECK(family_inf({a, chi}) == expected);

  CHECK_THROWS_AS(family_inf({}), EmptyFamilyError);
  CHECK_THROWS_AS(family_inf({a, b2()}), LengthError);
}

TEST_CASE("family inf and sup bound every member") {
  const std::vector<IFSubset> grid = enumerate_ifs(2, 2);
  for (std::size_t i = 0; i < grid.size(); i += 7)
    for (std::size_t j = 0; j < grid.size(); j += 5) {
      const std::vector<IFSubset> fam{grid[i], grid[j]};
      const IFSubset lo = family_inf(fam);
      const IFSubset hi = family_sup(fam);
      for (const IFSubset& a : fam) {
        CHECK(ifs_leq(lo, a));
        CHECK(ifs_leq(a, hi));
      }
    }
}

TEST_CASE("characteristic functions") {
  const IFSubset empty = characteristic(CrispSubset::empty(3));
  CHECK(empty == constant_ifs(3, Grade::zero(), Grade::one()));
  const IFSubset e0 = characteristic(CrispSubset::of(3, {0}));
  CHECK(e0 == IFSubset({grade(1), grade(0), grade(0)}, {grade(0), grade(1), grade(1)}));
  CHECK(characteristic(CrispSubset::full(1)) == IFSubset({grade(1)}, {grade(0)}));

  // mu + nu = 1 pointwise, and every positive cut recovers M.
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const CrispSubset m = CrispSubset::from_mask(3, mask);
    const IFSubset chi = characteristic(m);
    for (int x = 0; x < 3; ++x) CHECK(chi.mu(x).value() + chi.nu(x).value() == Rational(1));
    for (const Grade& t : {grade(1, 3), grade(1, 2), grade(1)}) {
      CHECK(level_cut(chi, t).upper == m);
    }
  }
}

TEST_CASE("level cuts") {
  const IFSubset a = a3();
  const CutPair cut = level_cut(a, grade(3, 10));
  CHECK(cut.upper == CrispSubset::of(3, {0, 2}));
  CHECK(cut.lower == CrispSubset::of(3, {0}));

  const CutPair zero = level_cut(a, Grade::zero());
  CHECK(zero.upper == CrispSubset::full(3));
  CHECK(zero.lower == CrispSubset::of(3, {0}));

  const CutPair one = level_cut(characteristic(CrispSubset::of(3, {0})), Grade::one());
  CHECK(one.upper == CrispSubset::of(3, {0}));
  CHECK(one.lower == CrispSubset::full(3));
}

TEST_CASE("cuts are monotone in the threshold") {
  for (const IFSubset& a : enumerate_ifs(2, 3)) {
    const std::vector<Grade> grid{grade(0), grade(1, 3), grade(2, 3), grade(1)};
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const CutPair at_t = level_cut(a, grid[i]);
      const CutPair at_u = level_cut(a, grid[i + 1]);
      CHECK(at_u.upper.subset_of(at_t.upper));
      CHECK(at_t.lower.subset_of(at_u.lower));
    }
  }
}

TEST_CASE("support and inff") {
  const IFSubset a = a3();
  CHECK(support(a) == CrispSubset::full(3));
  CHECK(inff(a) == CrispSubset::full(3));
  const IFSubset e0 = characteristic(CrispSubset::of(3, {0}));
  CHECK(support(e0) == CrispSubset::of(3, {0}));
  CHECK(inff(e0) == CrispSubset::of(3, {0}));
  const IFSubset zero = constant_ifs(3, Grade::zero(), Grade::one());
  CHECK(support(zero).is_empty());
  CHECK(inff(zero).is_empty());
}

TEST_CASE("constant, nonempty, image pairs and maximal pairs") {
  CHECK(is_constant(constant_ifs(4, grade(1, 2), grade(1, 4))));
  CHECK_FALSE(is_constant(a3()));
  CHECK(is_nonempty(a3()));
  CHECK_FALSE(is_nonempty(constant_ifs(3, Grade::zero(), Grade::one())));

  const std::vector<GradePair> image = image_pairs(a3());
  CHECK(image.size() == 3);
  CHECK(std::find(image.begin(), image.end(), GradePair{grade(1), grade(0)}) != image.end());
  CHECK(std::find(image.begin(), image.end(), GradePair{grade(1, 5), grade(1, 2)}) != image.end());
  CHECK(std::find(image.begin(), image.end(), GradePair{grade(3, 10), grade(2, 5)}) !=
        image.end());

  const std::vector<GradePair> maximal = maximal_pairs(a3());
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0] == GradePair{grade(1), grade(0)});
}
