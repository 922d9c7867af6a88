#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gil/gamma_semigroup.hpp"
#include "gil/ifs.hpp"

namespace gil {

// Deliberately corrupted predicate variants, selectable by tests only, to
// prove that reported witnesses are sound: a violation found under a fault
// must replay as a genuine failure with the fault on and as a non-failure
// with it off.
struct Faults {
  bool right_ideal_uses_y = false;    // fuzzy right-ideal test compares against the wrong operand
  bool crisp_ideal_left_only = false; // crisp ideal test skips right absorption
  bool semiprime_flipped = false;     // fuzzy semiprime inequalities reversed
  bool any() const { return right_ideal_uses_y || crisp_ideal_left_only || semiprime_flipped; }
};

// Outcome of a fuzzy one-sided or two-sided ideal test.
struct IfIdealVerdict {
  enum class State { Holds, Empty, Fails };
  State state = State::Holds;
  // Witness for Fails: the absorbing inequality that broke.
  int x = -1, gamma = -1, y = -1;
  char component = 'm';  // 'm' membership, 'n' nonmembership
  char side = 'l';       // 'l' left condition, 'r' right condition
  Grade lhs, rhs;        // failed relation: lhs >= rhs ('m') or lhs <= rhs ('n')
  bool holds() const { return state == State::Holds; }
};

IfIdealVerdict is_if_left_ideal(const GammaSemigroup& g, const IFSubset& a,
                                const Faults& faults = {});
IfIdealVerdict is_if_right_ideal(const GammaSemigroup& g, const IFSubset& a,
                                 const Faults& faults = {});
IfIdealVerdict is_if_ideal(const GammaSemigroup& g, const IFSubset& a, const Faults& faults = {});

// The absorbing inequalities alone, with no non-emptiness requirement; the
// empty IF subset satisfies them trivially. Extending a right ideal by a
// point with mu = 0 can produce an empty result whose inequalities still
// hold, so conclusions about one-sided ideals of extensions are stated in
// terms of this property.
IfIdealVerdict if_left_ideal_property(const GammaSemigroup& g, const IFSubset& a,
                                      const Faults& faults = {});
IfIdealVerdict if_right_ideal_property(const GammaSemigroup& g, const IFSubset& a,
                                       const Faults& faults = {});

// Witness of a failed grade relation at one or two points.
struct GradeCompareWitness {
  int x = -1, y = -1;    // y unused (-1) for one-point conditions
  char component = 'm';
  Grade lhs, rhs;
};

// The primeness equality alone (no ideal precondition):
//   inf_gamma mu(x.gamma.y) == mu(x) v mu(y) and
//   sup_gamma nu(x.gamma.y) == nu(x) ^ nu(y), exactly, for all x, y.
std::optional<GradeCompareWitness> if_prime_equality_fail(const GammaSemigroup& g,
                                                          const IFSubset& a);

// The semiprimeness condition alone:
//   mu(x) >= inf_gamma mu(x.gamma.x) and nu(x) <= sup_gamma nu(x.gamma.x).
std::optional<GradeCompareWitness> if_semiprime_condition_fail(const GammaSemigroup& g,
                                                               const IFSubset& a,
                                                               const Faults& faults = {});

// Bundled predicate: non-empty IF ideal plus the prime/semiprime condition.
struct IfPredicateVerdict {
  enum class State { Holds, NotIdeal, Fails };
  State state = State::Holds;
  IfIdealVerdict ideal;                      // explains NotIdeal (including emptiness)
  std::optional<GradeCompareWitness> fail;   // set for Fails
  bool holds() const { return state == State::Holds; }
};

IfPredicateVerdict is_if_prime(const GammaSemigroup& g, const IFSubset& a,
                               const Faults& faults = {});
IfPredicateVerdict is_if_semiprime(const GammaSemigroup& g, const IFSubset& a,
                                   const Faults& faults = {});

// Crisp side. An ideal is non-empty and absorbs products from both sides.
struct CrispIdealVerdict {
  enum class State { Holds, Empty, Fails };
  State state = State::Holds;
  int x = -1, gamma = -1, y = -1;  // witness: the product that escapes M
  char side = 'l';                 // 'l': x.gamma.y with y in M; 'r': y.gamma.x with y in M
  bool holds() const { return state == State::Holds; }
};

CrispIdealVerdict is_crisp_ideal(const GammaSemigroup& g, const CrispSubset& m,
                                 const Faults& faults = {});

struct CrispCondWitness {
  int x = -1, y = -1;
};

// Elementwise forms: x Gamma y subset of M => x in M or y in M, and the
// sandwich variant x Gamma S Gamma y. Conditions only; idealness is separate.
std::optional<CrispCondWitness> crisp_prime_elementwise_fail(const GammaSemigroup& g,
                                                             const CrispSubset& m);
std::optional<CrispCondWitness> crisp_prime_sandwich_fail(const GammaSemigroup& g,
                                                          const CrispSubset& m);
std::optional<CrispCondWitness> crisp_semiprime_elementwise_fail(const GammaSemigroup& g,
                                                                 const CrispSubset& m);
std::optional<CrispCondWitness> crisp_semiprime_sandwich_fail(const GammaSemigroup& g,
                                                              const CrispSubset& m);

// Ideal-pair forms, quantified by exhaustion over all crisp ideals:
//   prime:     A Gamma B subset of M => A subset of M or B subset of M
//   semiprime: A Gamma A subset of M => A subset of M
std::optional<std::pair<CrispSubset, CrispSubset>> crisp_prime_pair_fail(
    const GammaSemigroup& g, const CrispSubset& m, const Faults& faults = {});
std::optional<CrispSubset> crisp_semiprime_pair_fail(const GammaSemigroup& g, const CrispSubset& m,
                                                     const Faults& faults = {});

// All crisp ideals of g (non-empty absorbing subsets), in mask order.
std::vector<CrispSubset> crisp_ideals(const GammaSemigroup& g, const Faults& faults = {});

// Bundled crisp predicates; the elementwise form is the primary test.
struct CrispPredicateVerdict {
  enum class State { Holds, Empty, NotIdeal, Fails };
  State state = State::Holds;
  CrispIdealVerdict ideal;
  std::optional<CrispCondWitness> fail;
  bool holds() const { return state == State::Holds; }
};

CrispPredicateVerdict is_crisp_prime(const GammaSemigroup& g, const CrispSubset& m,
                                     const Faults& faults = {});
CrispPredicateVerdict is_crisp_semiprime(const GammaSemigroup& g, const CrispSubset& m,
                                         const Faults& faults = {});

// <x, M> = {y : x Gamma y subset of M}.
CrispSubset crisp_extension(const GammaSemigroup& g, int x, const CrispSubset& m);

}  // namespace gil
