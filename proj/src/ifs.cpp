#include "gil/ifs.hpp"

#include <algorithm>

namespace gil {

IFSubset::IFSubset(std::vector<Grade> mu, std::vector<Grade> nu)
    : mu_(std::move(mu)), nu_(std::move(nu)) {
  if (mu_.size() != nu_.size()) {
    throw LengthError("mu has " + std::to_string(mu_.size()) + " grades, nu has " +
                      std::to_string(nu_.size()));
  }
  for (std::size_t x = 0; x < mu_.size(); ++x) {
    const Rational sum = mu_[x].value() + nu_[x].value();
    if (sum > Rational(1)) {
      throw ConstraintError("mu+nu = " + sum.str() + " > 1 at index " + std::to_string(x),
                            static_cast<int>(x));
    }
  }
}

namespace {

void check_same_carrier(const IFSubset& a, const IFSubset& b) {
  if (a.size() != b.size()) {
    throw LengthError("IF subsets over carriers of size " + std::to_string(a.size()) + " and " +
                      std::to_string(b.size()));
  }
}

}  // namespace

bool ifs_leq(const IFSubset& a, const IFSubset& b) {
  check_same_carrier(a, b);
  for (int x = 0; x < a.size(); ++x) {
    if (a.mu(x) > b.mu(x) || a.nu(x) < b.nu(x)) return false;
  }
  return true;
}

IFSubset family_inf(const std::vector<IFSubset>& family) {
  if (family.empty()) throw EmptyFamilyError("inf of an empty family");
  std::vector<Grade> mu = family.front().mu_values();
  std::vector<Grade> nu = family.front().nu_values();
  for (std::size_t i = 1; i < family.size(); ++i) {
    check_same_carrier(family.front(), family[i]);
    for (int x = 0; x < family[i].size(); ++x) {
      mu[x] = std::min(mu[x], family[i].mu(x));
      nu[x] = std::max(nu[x], family[i].nu(x));
    }
  }
  return IFSubset(std::move(mu), std::move(nu));
}

IFSubset family_sup(const std::vector<IFSubset>& family) {
  if (family.empty()) throw EmptyFamilyError("sup of an empty family");
  std::vector<Grade> mu = family.front().mu_values();
  std::vector<Grade> nu = family.front().nu_values();
  for (std::size_t i = 1; i < family.size(); ++i) {
    check_same_carrier(family.front(), family[i]);
    for (int x = 0; x < family[i].size(); ++x) {
      mu[x] = std::max(mu[x], family[i].mu(x));
      nu[x] = std::min(nu[x], family[i].nu(x));
    }
  }
  return IFSubset(std::move(mu), std::move(nu));
}

IFSubset characteristic(const CrispSubset& m) {
  const int n = m.universe_size();
  std::vector<Grade> mu(n), nu(n);
  for (int x = 0; x < n; ++x) {
    mu[x] = m.contains(x) ? Grade::one() : Grade::zero();
    nu[x] = m.contains(x) ? Grade::zero() : Grade::one();
  }
  return IFSubset(std::move(mu), std::move(nu));
}

CutPair level_cut(const IFSubset& a, const Grade& t) {
  CrispSubset upper = CrispSubset::empty(a.size());
  CrispSubset lower = CrispSubset::empty(a.size());
  for (int x = 0; x < a.size(); ++x) {
    if (a.mu(x) >= t) upper.add(x);
    if (a.nu(x) <= t) lower.add(x);
  }
  return {upper, lower};
}

CrispSubset support(const IFSubset& a) {
  CrispSubset out = CrispSubset::empty(a.size());
  for (int x = 0; x < a.size(); ++x) {
    if (a.mu(x) > Grade::zero()) out.add(x);
  }
  return out;
}

CrispSubset inff(const IFSubset& a) {
  CrispSubset out = CrispSubset::empty(a.size());
  for (int x = 0; x < a.size(); ++x) {
    if (a.nu(x) < Grade::one()) out.add(x);
  }
  return out;
}

bool is_constant(const IFSubset& a) {
  for (int x = 1; x < a.size(); ++x) {
    if (a.mu(x) != a.mu(0) || a.nu(x) != a.nu(0)) return false;
  }
  return true;
}

bool is_nonempty(const IFSubset& a) {
  for (int x = 0; x < a.size(); ++x) {
    if (a.mu(x) > Grade::zero() && a.nu(x) < Grade::one()) return true;
  }
  return false;
}

std::vector<GradePair> image_pairs(const IFSubset& a) {
  std::vector<GradePair> out;
  out.reserve(a.size());
  for (int x = 0; x < a.size(); ++x) out.push_back(a.at(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GradePair> maximal_pairs(const IFSubset& a) {
  const std::vector<GradePair> pairs = image_pairs(a);
  std::vector<GradePair> out;
  for (const GradePair& p : pairs) {
    bool dominated = false;
    for (const GradePair& q : pairs) {
      if (q != p && grade_pair_leq(p, q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

}  // namespace gil
