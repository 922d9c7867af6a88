#pragma once

#include <compare>
#include <string_view>
#include <utility>
#include <vector>

#include "gil/crisp_subset.hpp"
#include "gil/rational.hpp"

namespace gil {

// Exact grade in [0, 1].
class Grade {
 public:
  Grade() = default;
  explicit Grade(const Rational& v) : v_(v) {
    if (v < Rational(0) || v > Rational(1)) {
      throw GradeRangeError("grade " + v.str() + " outside [0,1]");
    }
  }

  static Grade parse(std::string_view text) { return Grade(Rational::parse(text)); }
  static Grade zero() { return Grade(); }
  static Grade one() { return Grade(Rational(1)); }

  const Rational& value() const { return v_; }
  std::string str() const { return v_.str(); }

  bool operator==(const Grade&) const = default;
  auto operator<=>(const Grade&) const = default;

 private:
  Rational v_;
};

inline Grade grade(std::int64_t num, std::int64_t den = 1) { return Grade(Rational(num, den)); }

using GradePair = std::pair<Grade, Grade>;  // (membership, nonmembership)

// (p,q) <= (p',q') in the membership/nonmembership order: p <= p' and q >= q'.
inline bool grade_pair_leq(const GradePair& a, const GradePair& b) {
  return a.first <= b.first && a.second >= b.second;
}

// Intuitionistic fuzzy subset of {0..n-1}: membership mu and nonmembership nu
// with mu(x) + nu(x) <= 1 at every point, checked at construction. Immutable.
class IFSubset {
 public:
  IFSubset(std::vector<Grade> mu, std::vector<Grade> nu);

  int size() const { return static_cast<int>(mu_.size()); }
  const Grade& mu(int x) const { return mu_.at(x); }
  const Grade& nu(int x) const { return nu_.at(x); }
  const std::vector<Grade>& mu_values() const { return mu_; }
  const std::vector<Grade>& nu_values() const { return nu_; }
  GradePair at(int x) const { return {mu_.at(x), nu_.at(x)}; }

  bool operator==(const IFSubset&) const = default;

 private:
  std::vector<Grade> mu_, nu_;
};

// Pair of level cuts: upper = U(mu : t) = {x : mu(x) >= t},
// lower = L(nu : t) = {x : nu(x) <= t}.
struct CutPair {
  CrispSubset upper, lower;
  bool operator==(const CutPair&) const = default;
};

// A contained in B: mu_A <= mu_B and nu_A >= nu_B pointwise.
bool ifs_leq(const IFSubset& a, const IFSubset& b);

// Pointwise (min mu, max nu) / (max mu, min nu) over a non-empty family.
IFSubset family_inf(const std::vector<IFSubset>& family);
IFSubset family_sup(const std::vector<IFSubset>& family);

// (indicator of M, indicator of the complement).
IFSubset characteristic(const CrispSubset& m);

CutPair level_cut(const IFSubset& a, const Grade& t);

// {x : mu(x) > 0} and {x : nu(x) < 1}.
CrispSubset support(const IFSubset& a);
CrispSubset inff(const IFSubset& a);

// mu and nu each take a single value.
bool is_constant(const IFSubset& a);

// Some point has mu(x) > 0 and nu(x) < 1.
bool is_nonempty(const IFSubset& a);

// The image set {(mu(x), nu(x)) : x}, sorted and deduplicated.
std::vector<GradePair> image_pairs(const IFSubset& a);

// Maximal elements of image_pairs under grade_pair_leq.
std::vector<GradePair> maximal_pairs(const IFSubset& a);

}  // namespace gil
