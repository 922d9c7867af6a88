#pragma once

#include <vector>

#include "gil/gamma_semigroup.hpp"
#include "gil/ifs.hpp"

namespace gil::testing {

// Singleton structure: n = m = 1, everything collapses.
inline GammaSemigroup t1() { return GammaSemigroup::build(1, 1, {0}, {0}); }

// Null structure on three elements: every S-product is 0.
inline GammaSemigroup n3() {
  return GammaSemigroup::build(3, 1, std::vector<int>(9, 0), std::vector<int>(3, 0));
}

// Null structure on two elements.
inline GammaSemigroup n2() {
  return GammaSemigroup::build(2, 1, std::vector<int>(4, 0), std::vector<int>(2, 0));
}

// Right projection on two elements: a.0.b = b. Not commutative.
inline GammaSemigroup r2() { return GammaSemigroup::build(2, 1, {0, 1, 0, 1}, {0, 0}); }

// Left projection on two elements: a.0.b = a. Not commutative.
inline GammaSemigroup l2() { return GammaSemigroup::build(2, 1, {0, 0, 1, 1}, {0, 0}); }

// mu = (1, 1/5, 3/10), nu = (0, 1/2, 2/5) over a 3-element carrier.
inline IFSubset a3() {
  return IFSubset({grade(1), grade(1, 5), grade(3, 10)}, {grade(0), grade(1, 2), grade(2, 5)});
}

// mu = (1/2, 1/4), nu = (1/4, 1/2) over a 2-element carrier.
inline IFSubset b2() {
  return IFSubset({grade(1, 2), grade(1, 4)}, {grade(1, 4), grade(1, 2)});
}

inline IFSubset constant_ifs(int n, const Grade& mu, const Grade& nu) {
  return IFSubset(std::vector<Grade>(n, mu), std::vector<Grade>(n, nu));
}

}  // namespace gil::testing
