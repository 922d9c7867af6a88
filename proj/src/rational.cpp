#include "gil/rational.hpp"

#include <cctype>
#include <limits>

#include "gil/errors.hpp"

namespace gil {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("rational overflow: value does not fit 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = num == 0 ? den : gcd128(num, den);
  return Rational(narrow(num / g), narrow(den / g));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i128 g = n == 0 ? d : gcd128(n, d);
  num_ = narrow(n / g);
  den_ = narrow(d / g);
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator-() const { return make_reduced(-i128(num_), den_); }

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const i128 lhs = i128(num_) * o.den_;
  const i128 rhs = i128(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Parses a run of at most 18 decimal digits (so any later scaling still fits).
i128 parse_digits(std::string_view s, size_t& pos, const std::string_view whole) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw ParseError("invalid rational \"" + std::string(whole) + "\"");
  }
  i128 value = 0;
  int digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    if (++digits > 18) throw ParseError("too many digits in \"" + std::string(whole) + "\"");
    value = value * 10 + (s[pos] - '0');
    ++pos;
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");

  size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }

  i128 num = parse_digits(s, pos, text);
  i128 den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = parse_digits(s, pos, text);
    if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  } else if (pos < s.size() && s[pos] == '.') {
    ++pos;
    const size_t start = pos;
    const i128 frac = parse_digits(s, pos, text);
    for (size_t i = start; i < pos; ++i) den *= 10;
    num = num * den + frac;
  }
  if (pos != s.size()) throw ParseError("invalid rational \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return make_reduced(num, den);
}

}  // namespace gil
