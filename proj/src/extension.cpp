#include "gil/extension.hpp"

#include <algorithm>

#include "gil/errors.hpp"

namespace gil {

IFSubset extend(const GammaSemigroup& g, int x, const IFSubset& a) {
  if (a.size() != g.n()) {
    throw LengthError("IF subset over carrier of size " + std::to_string(a.size()) +
                      ", structure has n = " + std::to_string(g.n()));
  }
  std::vector<Grade> mu(g.n()), nu(g.n());
  for (int y = 0; y < g.n(); ++y) {
    Grade lo = a.mu(g.s_prod(x, 0, y));
    Grade hi = a.nu(g.s_prod(x, 0, y));
    for (int ga = 1; ga < g.m(); ++ga) {
      const int p = g.s_prod(x, ga, y);
      lo = std::min(lo, a.mu(p));
      hi = std::max(hi, a.nu(p));
    }
    mu[y] = lo;
    nu[y] = hi;
  }
  return IFSubset(std::move(mu), std::move(nu));
}

IFSubset extend_iterated(const GammaSemigroup& g, int x, int alpha, int k, const IFSubset& a) {
  return extend(g, g.iterate_power(x, alpha, k), a);
}

CrispSubset fixed_point_set(const GammaSemigroup& g, const IFSubset& a) {
  CrispSubset out = CrispSubset::empty(g.n());
  for (int x = 0; x < g.n(); ++x) {
    if (extend(g, x, a) == a) out.add(x);
  }
  return out;
}

}  // namespace gil
