#include "gil/ideals.hpp"

#include <algorithm>

namespace gil {

namespace {

void check_carrier(const GammaSemigroup& g, const IFSubset& a) {
  if (a.size() != g.n()) {
    throw LengthError("IF subset over carrier of size " + std::to_string(a.size()) +
                      ", structure has n = " + std::to_string(g.n()));
  }
}

void check_carrier(const GammaSemigroup& g, const CrispSubset& m) {
  if (m.universe_size() != g.n()) {
    throw LengthError("subset over universe of size " + std::to_string(m.universe_size()) +
                      ", structure has n = " + std::to_string(g.n()));
  }
}

Grade orbit_inf_mu(const GammaSemigroup& g, const IFSubset& a, int x, int y) {
  Grade v = a.mu(g.s_prod(x, 0, y));
  for (int ga = 1; ga < g.m(); ++ga) v = std::min(v, a.mu(g.s_prod(x, ga, y)));
  return v;
}

Grade orbit_sup_nu(const GammaSemigroup& g, const IFSubset& a, int x, int y) {
  Grade v = a.nu(g.s_prod(x, 0, y));
  for (int ga = 1; ga < g.m(); ++ga) v = std::max(v, a.nu(g.s_prod(x, ga, y)));
  return v;
}

}  // namespace

IfIdealVerdict if_left_ideal_property(const GammaSemigroup& g, const IFSubset& a, const Faults&) {
  check_carrier(g, a);
  for (int x = 0; x < g.n(); ++x)
    for (int ga = 0; ga < g.m(); ++ga)
      for (int y = 0; y < g.n(); ++y) {
        const int p = g.s_prod(x, ga, y);
        if (a.mu(p) < a.mu(y)) {
          return {IfIdealVerdict::State::Fails, x, ga, y, 'm', 'l', a.mu(p), a.mu(y)};
        }
        if (a.nu(p) > a.nu(y)) {
          return {IfIdealVerdict::State::Fails, x, ga, y, 'n', 'l', a.nu(p), a.nu(y)};
        }
      }
  return {};
}

IfIdealVerdict if_right_ideal_property(const GammaSemigroup& g, const IFSubset& a,
                                       const Faults& faults) {
  check_carrier(g, a);
  for (int x = 0; x < g.n(); ++x)
    for (int ga = 0; ga < g.m(); ++ga)
      for (int y = 0; y < g.n(); ++y) {
        const int p = g.s_prod(x, ga, y);
        // The corrupted variant reads the grade of y instead of x, which turns
        // the test into a duplicate of the left condition.
        const int anchor = faults.right_ideal_uses_y ? y : x;
        if (a.mu(p) < a.mu(anchor)) {
          return {IfIdealVerdict::State::Fails, x, ga, y, 'm', 'r', a.mu(p), a.mu(anchor)};
        }
        if (a.nu(p) > a.nu(anchor)) {
          return {IfIdealVerdict::State::Fails, x, ga, y, 'n', 'r', a.nu(p), a.nu(anchor)};
        }
      }
  return {};
}

IfIdealVerdict is_if_left_ideal(const GammaSemigroup& g, const IFSubset& a, const Faults& faults) {
  check_carrier(g, a);
  if (!is_nonempty(a)) {
    IfIdealVerdict v;
    v.state = IfIdealVerdict::State::Empty;
    return v;
  }
  return if_left_ideal_property(g, a, faults);
}

IfIdealVerdict is_if_right_ideal(const GammaSemigroup& g, const IFSubset& a,
                                 const Faults& faults) {
  check_carrier(g, a);
  if (!is_nonempty(a)) {
    IfIdealVerdict v;
    v.state = IfIdealVerdict::State::Empty;
    return v;
  }
  return if_right_ideal_property(g, a, faults);
}

IfIdealVerdict is_if_ideal(const GammaSemigroup& g, const IFSubset& a, const Faults& faults) {
  const IfIdealVerdict left = is_if_left_ideal(g, a, faults);
  if (!left.holds()) return left;
  return is_if_right_ideal(g, a, faults);
}

std::optional<GradeCompareWitness> if_prime_equality_fail(const GammaSemigroup& g,
                                                          const IFSubset& a) {
  check_carrier(g, a);
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y) {
      const Grade mu_inf = orbit_inf_mu(g, a, x, y);
      const Grade mu_join = std::max(a.mu(x), a.mu(y));
      if (mu_inf != mu_join) return GradeCompareWitness{x, y, 'm', mu_inf, mu_join};
      const Grade nu_sup = orbit_sup_nu(g, a, x, y);
      const Grade nu_meet = std::min(a.nu(x), a.nu(y));
      if (nu_sup != nu_meet) return GradeCompareWitness{x, y, 'n', nu_sup, nu_meet};
    }
  return std::nullopt;
}

std::optional<GradeCompareWitness> if_semiprime_condition_fail(const GammaSemigroup& g,
                                                               const IFSubset& a,
                                                               const Faults& faults) {
  check_carrier(g, a);
  for (int x = 0; x < g.n(); ++x) {
    const Grade mu_inf = orbit_inf_mu(g, a, x, x);
    const Grade nu_sup = orbit_sup_nu(g, a, x, x);
    if (faults.semiprime_flipped) {
      if (a.mu(x) > mu_inf) return GradeCompareWitness{x, -1, 'm', a.mu(x), mu_inf};
      if (a.nu(x) < nu_sup) return GradeCompareWitness{x, -1, 'n', a.nu(x), nu_sup};
    } else {
      if (a.mu(x) < mu_inf) return GradeCompareWitness{x, -1, 'm', a.mu(x), mu_inf};
      if (a.nu(x) > nu_sup) return GradeCompareWitness{x, -1, 'n', a.nu(x), nu_sup};
    }
  }
  return std::nullopt;
}

IfPredicateVerdict is_if_prime(const GammaSemigroup& g, const IFSubset& a, const Faults& faults) {
  IfPredicateVerdict v;
  v.ideal = is_if_ideal(g, a, faults);
  if (!v.ideal.holds()) {
    v.state = IfPredicateVerdict::State::NotIdeal;
    return v;
  }
  v.fail = if_prime_equality_fail(g, a);
  v.state = v.fail ? IfPredicateVerdict::State::Fails : IfPredicateVerdict::State::Holds;
  return v;
}

IfPredicateVerdict is_if_semiprime(const GammaSemigroup& g, const IFSubset& a,
                                   const Faults& faults) {
  IfPredicateVerdict v;
  v.ideal = is_if_ideal(g, a, faults);
  if (!v.ideal.holds()) {
    v.state = IfPredicateVerdict::State::NotIdeal;
    return v;
  }
  v.fail = if_semiprime_condition_fail(g, a, faults);
  v.state = v.fail ? IfPredicateVerdict::State::Fails : IfPredicateVerdict::State::Holds;
  return v;
}

CrispIdealVerdict is_crisp_ideal(const GammaSemigroup& g, const CrispSubset& m,
                                 const Faults& faults) {
  check_carrier(g, m);
  if (m.is_empty()) { CrispIdealVerdict v; v.state = CrispIdealVerdict::State::Empty; return v; }
  for (int x = 0; x < g.n(); ++x)
    for (int ga = 0; ga < g.m(); ++ga)
      for (int y = 0; y < g.n(); ++y) {
        if (!m.contains(y)) continue;
        if (!m.contains(g.s_prod(x, ga, y))) {
          return {CrispIdealVerdict::State::Fails, x, ga, y, 'l'};
        }
        if (!faults.crisp_ideal_left_only && !m.contains(g.s_prod(y, ga, x))) {
          return {CrispIdealVerdict::State::Fails, x, ga, y, 'r'};
        }
      }
  return {};
}

namespace {

bool orbit_in(const GammaSemigroup& g, int x, int y, const CrispSubset& m) {
  for (int ga = 0; ga < g.m(); ++ga) {
    if (!m.contains(g.s_prod(x, ga, y))) return false;
  }
  return true;
}

bool sandwich_in(const GammaSemigroup& g, int x, int y, const CrispSubset& m) {
  // x Gamma S Gamma y subset of M
  for (int al = 0; al < g.m(); ++al)
    for (int s = 0; s < g.n(); ++s)
      for (int be = 0; be < g.m(); ++be) {
        if (!m.contains(g.s_prod(g.s_prod(x, al, s), be, y))) return false;
      }
  return true;
}

CrispSubset product_set(const GammaSemigroup& g, const CrispSubset& a, const CrispSubset& b) {
  CrispSubset out = CrispSubset::empty(g.n());
  for (int x : a.elements())
    for (int ga = 0; ga < g.m(); ++ga)
      for (int y : b.elements()) out.add(g.s_prod(x, ga, y));
  return out;
}

}  // namespace

std::optional<CrispCondWitness> crisp_prime_elementwise_fail(const GammaSemigroup& g,
                                                             const CrispSubset& m) {
  check_carrier(g, m);
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y) {
      if (orbit_in(g, x, y, m) && !m.contains(x) && !m.contains(y)) {
        return CrispCondWitness{x, y};
      }
    }
  return std::nullopt;
}

std::optional<CrispCondWitness> crisp_prime_sandwich_fail(const GammaSemigroup& g,
                                                          const CrispSubset& m) {
  check_carrier(g, m);
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y) {
      if (sandwich_in(g, x, y, m) && !m.contains(x) && !m.contains(y)) {
        return CrispCondWitness{x, y};
      }
    }
  return std::nullopt;
}

std::optional<CrispCondWitness> crisp_semiprime_elementwise_fail(const GammaSemigroup& g,
                                                                 const CrispSubset& m) {
  check_carrier(g, m);
  for (int x = 0; x < g.n(); ++x) {
    if (orbit_in(g, x, x, m) && !m.contains(x)) return CrispCondWitness{x, -1};
  }
  return std::nullopt;
}

std::optional<CrispCondWitness> crisp_semiprime_sandwich_fail(const GammaSemigroup& g,
                                                              const CrispSubset& m) {
  check_carrier(g, m);
  for (int x = 0; x < g.n(); ++x) {
    if (sandwich_in(g, x, x, m) && !m.contains(x)) return CrispCondWitness{x, -1};
  }
  return std::nullopt;
}

std::vector<CrispSubset> crisp_ideals(const GammaSemigroup& g, const Faults& faults) {
  std::vector<CrispSubset> out;
  const std::uint64_t limit = std::uint64_t{1} << g.n();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const CrispSubset m = CrispSubset::from_mask(g.n(), mask);
    if (is_crisp_ideal(g, m, faults).holds()) out.push_back(m);
  }
  return out;
}

std::optional<std::pair<CrispSubset, CrispSubset>> crisp_prime_pair_fail(const GammaSemigroup& g,
                                                                         const CrispSubset& m,
                                                                         const Faults& faults) {
  check_carrier(g, m);
  const std::vector<CrispSubset> ideals = crisp_ideals(g, faults);
  for (const CrispSubset& a : ideals)
    for (const CrispSubset& b : ideals) {
      if (product_set(g, a, b).subset_of(m) && !a.subset_of(m) && !b.subset_of(m)) {
        return std::make_pair(a, b);
      }
    }
  return std::nullopt;
}

std::optional<CrispSubset> crisp_semiprime_pair_fail(const GammaSemigroup& g, const CrispSubset& m,
                                                     const Faults& faults) {
  check_carrier(g, m);
  for (const CrispSubset& a : crisp_ideals(g, faults)) {
    if (product_set(g, a, a).subset_of(m) && !a.subset_of(m)) return a;
  }
  return std::nullopt;
}

namespace {

CrispPredicateVerdict bundled_crisp(const GammaSemigroup& g, const CrispSubset& m,
                                    const Faults& faults, bool prime) {
  CrispPredicateVerdict v;
  v.ideal = is_crisp_ideal(g, m, faults);
  if (v.ideal.state == CrispIdealVerdict::State::Empty) {
    v.state = CrispPredicateVerdict::State::Empty;
    return v;
  }
  if (!v.ideal.holds()) {
    v.state = CrispPredicateVerdict::State::NotIdeal;
    return v;
  }
  v.fail = prime ? crisp_prime_elementwise_fail(g, m) : crisp_semiprime_elementwise_fail(g, m);
  v.state = v.fail ? CrispPredicateVerdict::State::Fails : CrispPredicateVerdict::State::Holds;
  return v;
}

}  // namespace

CrispPredicateVerdict is_crisp_prime(const GammaSemigroup& g, const CrispSubset& m,
                                     const Faults& faults) {
  return bundled_crisp(g, m, faults, true);
}

CrispPredicateVerdict is_crisp_semiprime(const GammaSemigroup& g, const CrispSubset& m,
                                         const Faults& faults) {
  return bundled_crisp(g, m, faults, false);
}

CrispSubset crisp_extension(const GammaSemigroup& g, int x, const CrispSubset& m) {
  check_carrier(g, m);
  CrispSubset out = CrispSubset::empty(g.n());
  for (int y = 0; y < g.n(); ++y) {
    if (orbit_in(g, x, y, m)) out.add(y);
  }
  return out;
}

}  // namespace gil
