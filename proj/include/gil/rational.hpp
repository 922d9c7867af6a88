#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gil {

// Exact rational number kept in canonical form (den > 0, gcd(|num|, den) == 1).
// Arithmetic and comparisons run through 128-bit intermediates; a result that
// does not fit 64 bits raises Error instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p/q", plain integers, and exact decimal strings ("0.25" -> 1/4),
  // with an optional leading sign. Exponents and other float syntax are
  // rejected; conversion is exact.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gil
