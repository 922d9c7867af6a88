#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gil/errors.hpp"

namespace gil {

// Subset of a carrier {0..n-1}, stored as a bit mask. Carriers are desk-scale
// (n <= 64 enforced).
class CrispSubset {
 public:
  CrispSubset() = default;

  static CrispSubset empty(int n) { return CrispSubset(n, 0); }
  static CrispSubset full(int n) {
    check_universe(n);
    return CrispSubset(n, n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static CrispSubset from_mask(int n, std::uint64_t mask) { return CrispSubset(n, mask); }
  static CrispSubset of(int n, std::initializer_list<int> elems) {
    CrispSubset s = empty(n);
    for (int e : elems) s.add(e);
    return s;
  }
  static CrispSubset from_indices(int n, const std::vector<int>& elems) {
    CrispSubset s = empty(n);
    for (int e : elems) s.add(e);
    return s;
  }

  int universe_size() const { return n_; }

  bool contains(int x) const {
    check_element(x);
    return (bits_ >> x) & 1u;
  }

  void add(int x) {
    check_element(x);
    bits_ |= std::uint64_t{1} << x;
  }

  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return *this == full(n_); }

  int count() const {
    int c = 0;
    for (std::uint64_t b = bits_; b; b &= b - 1) ++c;
    return c;
  }

  bool subset_of(const CrispSubset& o) const {
    check_same_universe(o);
    return (bits_ & ~o.bits_) == 0;
  }

  CrispSubset intersect(const CrispSubset& o) const {
    check_same_universe(o);
    return CrispSubset(n_, bits_ & o.bits_);
  }

  std::uint64_t mask() const { return bits_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
      if ((bits_ >> i) & 1u) out.push_back(i);
    }
    return out;
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  bool operator==(const CrispSubset&) const = default;

 private:
  CrispSubset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    check_universe(n);
    if (n < 64 && (bits >> n) != 0) throw RangeError("subset mask exceeds universe");
  }

  static void check_universe(int n) {
    if (n < 0 || n > 64) throw ShapeError("subset universe size must be in [0, 64]");
  }

  void check_element(int x) const {
    if (x < 0 || x >= n_) {
      throw RangeError("subset element " + std::to_string(x) + " outside universe of size " +
                       std::to_string(n_));
    }
  }

  void check_same_universe(const CrispSubset& o) const {
    if (n_ != o.n_) throw LengthError("subsets over different universes");
  }

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace gil
