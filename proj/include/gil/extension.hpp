#pragma once

#include "gil/gamma_semigroup.hpp"
#include "gil/ifs.hpp"

namespace gil {

// The extension <x, A>: y -> (inf_gamma mu(x.gamma.y), sup_gamma nu(x.gamma.y)).
// Gamma is finite, so inf/sup are attained minima/maxima; the result always
// satisfies mu + nu <= 1.
IFSubset extend(const GammaSemigroup& g, int x, const IFSubset& a);

// extend by the element (x.alpha)^k x.
IFSubset extend_iterated(const GammaSemigroup& g, int x, int alpha, int k, const IFSubset& a);

// {x : <x, A> == A}, with exact grade equality.
CrispSubset fixed_point_set(const GammaSemigroup& g, const IFSubset& a);

}  // namespace gil
