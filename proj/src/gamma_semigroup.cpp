#include "gil/gamma_semigroup.hpp"

#include "gil/errors.hpp"

namespace gil {

namespace {

void check_entries(const std::vector<int>& table, int bound, const char* name, int d1, int d2) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= bound) {
      const int c = static_cast<int>(i % d2);
      const int b = static_cast<int>((i / d2) % d1);
      const int a = static_cast<int>(i / (static_cast<std::size_t>(d1) * d2));
      throw RangeError(std::string(name) + " entry " + std::to_string(table[i]) + " at [" +
                       std::to_string(a) + "][" + std::to_string(b) + "][" + std::to_string(c) +
                       "] outside [0," + std::to_string(bound) + ")");
    }
  }
}

}  // namespace

GammaSemigroup GammaSemigroup::build(int n, int m, std::vector<int> s_table,
                                     std::vector<int> g_table, std::vector<std::string> s_labels,
                                     std::vector<std::string> g_labels) {
  if (n < 1) throw ShapeError("carrier size n must be positive");
  if (m < 1) throw ShapeError("carrier size m must be positive");
  const std::size_t s_size = static_cast<std::size_t>(n) * m * n;
  const std::size_t g_size = static_cast<std::size_t>(m) * n * m;
  if (s_table.size() != s_size) {
    throw ShapeError("s_table has " + std::to_string(s_table.size()) + " entries, expected " +
                     std::to_string(s_size) + " (n*m*n)");
  }
  if (g_table.size() != g_size) {
    throw ShapeError("g_table has " + std::to_string(g_table.size()) + " entries, expected " +
                     std::to_string(g_size) + " (m*n*m)");
  }
  check_entries(s_table, n, "s_table", m, n);
  check_entries(g_table, m, "g_table", n, m);
  if (!s_labels.empty() && static_cast<int>(s_labels.size()) != n) {
    throw LengthError("s_labels length does not match n");
  }
  if (!g_labels.empty() && static_cast<int>(g_labels.size()) != m) {
    throw LengthError("g_labels length does not match m");
  }

  GammaSemigroup g;
  g.n_ = n;
  g.m_ = m;
  g.s_table_ = std::move(s_table);
  g.g_table_ = std::move(g_table);
  g.s_labels_ = std::move(s_labels);
  g.g_labels_ = std::move(g_labels);

  // First chain, scanned in (a,b,c,alpha,beta) order.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be) {
            const int e1 = g.s_at(g.s_at(a, al, b), be, c);
            const int e2 = g.s_at(a, g.g_at(al, b, be), c);
            const int e3 = g.s_at(a, al, g.s_at(b, be, c));
            if (e1 != e2) {
              throw AssociativityError(1, {a, b, c, al, be}, "(a.al.b).be.c", e1,
                                       "a.(al.b.be).c", e2);
            }
            if (e1 != e3) {
              throw AssociativityError(1, {a, b, c, al, be}, "(a.al.b).be.c", e1,
                                       "a.al.(b.be.c)", e3);
            }
          }

  // Second chain, scanned in (alpha,beta,gamma,a,b) order.
  for (int al = 0; al < m; ++al)
    for (int be = 0; be < m; ++be)
      for (int ga = 0; ga < m; ++ga)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const int f1 = g.g_at(al, g.s_at(a, be, b), ga);
            const int f2 = g.g_at(g.g_at(al, a, be), b, ga);
            const int f3 = g.g_at(al, a, g.g_at(be, b, ga));
            if (f1 != f2) {
              throw AssociativityError(2, {al, be, ga, a, b}, "al.(a.be.b).ga", f1,
                                       "(al.a.be).b.ga", f2);
            }
            if (f1 != f3) {
              throw AssociativityError(2, {al, be, ga, a, b}, "al.(a.be.b).ga", f1,
                                       "al.a.(be.b.ga)", f3);
            }
          }

  for (int a = 0; a < n && !g.noncommutative_witness_; ++a)
    for (int ga = 0; ga < m && !g.noncommutative_witness_; ++ga)
      for (int b = 0; b < n; ++b) {
        if (g.s_at(a, ga, b) != g.s_at(b, ga, a)) {
          g.noncommutative_witness_ = CommutativityWitness{a, ga, b};
          break;
        }
      }

  return g;
}

void GammaSemigroup::check_s(int x, const char* role) const {
  if (x < 0 || x >= n_) {
    throw RangeError(std::string(role) + " index " + std::to_string(x) + " outside S of size " +
                     std::to_string(n_));
  }
}

void GammaSemigroup::check_g(int gamma, const char* role) const {
  if (gamma < 0 || gamma >= m_) {
    throw RangeError(std::string(role) + " index " + std::to_string(gamma) +
                     " outside Gamma of size " + std::to_string(m_));
  }
}

int GammaSemigroup::s_prod(int a, int gamma, int b) const {
  check_s(a, "left operand");
  check_g(gamma, "middle operand");
  check_s(b, "right operand");
  return s_at(a, gamma, b);
}

int GammaSemigroup::g_prod(int alpha, int a, int beta) const {
  check_g(alpha, "left operand");
  check_s(a, "middle operand");
  check_g(beta, "right operand");
  return g_at(alpha, a, beta);
}

CommutativityResult GammaSemigroup::is_commutative() const {
  return {!noncommutative_witness_.has_value(), noncommutative_witness_};
}

int GammaSemigroup::iterate_power(int x, int alpha, int k) const {
  check_s(x, "base");
  check_g(alpha, "exponent step");
  if (k < 0) throw RangeError("power must be non-negative");
  int result = x;
  for (int i = 0; i < k; ++i) result = s_at(x, alpha, result);
  return result;
}

int GammaSemigroup::iterate_power_left(int x, int alpha, int k) const {
  check_s(x, "base");
  check_g(alpha, "exponent step");
  if (k < 0) throw RangeError("power must be non-negative");
  int result = x;
  for (int i = 0; i < k; ++i) result = s_at(result, alpha, x);
  return result;
}

CrispSubset GammaSemigroup::gamma_orbit(int x, int y) const {
  check_s(x, "left operand");
  check_s(y, "right operand");
  CrispSubset orbit = CrispSubset::empty(n_);
  for (int ga = 0; ga < m_; ++ga) orbit.add(s_at(x, ga, y));
  return orbit;
}

std::string GammaSemigroup::s_name(int x) const {
  check_s(x, "element");
  if (!s_labels_.empty()) return s_labels_[x];
  return std::to_string(x);
}

std::string GammaSemigroup::g_name(int gamma) const {
  check_g(gamma, "element");
  if (!g_labels_.empty()) return g_labels_[gamma];
  return std::to_string(gamma);
}

}  // namespace gil
