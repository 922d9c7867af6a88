#include "gil/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "gil/errors.hpp"

namespace gil {

void StructureQuery::validate() const {
  if (n_min < 1 || m_min < 1) throw Error("size bounds must be at least 1");
  if (n_max < n_min || m_max < m_min) throw Error("empty size range");
  if (n_max > 6 || m_max > 6) throw Error("size bounds above 6 are not supported");
  if (grade_denominator < 1) throw Error("grade denominator must be at least 1");
  if (ifs_mode == IfsMode::Random && random_count < 0) {
    throw Error("random IFS mode needs a non-negative count");
  }
}

namespace {

// Backtracking search over the two tables. Cells are assigned in flat order
// (s_table before g_table); after each assignment every chain instance is
// re-evaluated three-valued: a lookup through an unassigned cell leaves the
// instance undetermined, anything fully determined and unequal kills the
// branch.
class StructureSearch {
 public:
  StructureSearch(int n, int m, bool commutative_only,
                  std::function<bool(const GammaSemigroup&)> visit)
      : n_(n),
        m_(m),
        commutative_only_(commutative_only),
        visit_(std::move(visit)),
        s_(static_cast<std::size_t>(n) * m * n, -1),
        g_(static_cast<std::size_t>(m) * n * m, -1) {}

  // Returns false if the visitor asked to stop.
  bool run() { return descend(0); }

 private:
  int s_at(int a, int ga, int b) const { return s_[GammaSemigroup::s_index(n_, m_, a, ga, b)]; }
  int g_at(int al, int a, int be) const { return g_[GammaSemigroup::g_index(n_, m_, al, a, be)]; }

  bool chains_alive() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int al = 0; al < m_; ++al)
            for (int be = 0; be < m_; ++be) {
              const int ab = s_at(a, al, b);
              const int e1 = ab < 0 ? -1 : s_at(ab, be, c);
              const int mid = g_at(al, b, be);
              const int e2 = mid < 0 ? -1 : s_at(a, mid, c);
              const int bc = s_at(b, be, c);
              const int e3 = bc < 0 ? -1 : s_at(a, al, bc);
              if (e1 >= 0 && e2 >= 0 && e1 != e2) return false;
              if (e1 >= 0 && e3 >= 0 && e1 != e3) return false;
              if (e2 >= 0 && e3 >= 0 && e2 != e3) return false;
            }
    for (int al = 0; al < m_; ++al)
      for (int be = 0; be < m_; ++be)
        for (int ga = 0; ga < m_; ++ga)
          for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
              const int ab = s_at(a, be, b);
              const int f1 = ab < 0 ? -1 : g_at(al, ab, ga);
              const int mid = g_at(al, a, be);
              const int f2 = mid < 0 ? -1 : g_at(mid, b, ga);
              const int bg = g_at(be, b, ga);
              const int f3 = bg < 0 ? -1 : g_at(al, a, bg);
              if (f1 >= 0 && f2 >= 0 && f1 != f2) return false;
              if (f1 >= 0 && f3 >= 0 && f1 != f3) return false;
              if (f2 >= 0 && f3 >= 0 && f2 != f3) return false;
            }
    if (commutative_only_) {
      for (int a = 0; a < n_; ++a)
        for (int ga = 0; ga < m_; ++ga)
          for (int b = a + 1; b < n_; ++b) {
            const int ab = s_at(a, ga, b);
            const int ba = s_at(b, ga, a);
            if (ab >= 0 && ba >= 0 && ab != ba) return false;
          }
    }
    return true;
  }

  bool descend(std::size_t cell) {
    const std::size_t s_cells = s_.size();
    if (cell == s_cells + g_.size()) {
      // Leaf: the branch survived all pruning; the full validator is still the
      // authority on what gets emitted.
      return visit_(GammaSemigroup::build(n_, m_, s_, g_));
    }
    const bool in_s = cell < s_cells;
    const int values = in_s ? n_ : m_;
    int& slot = in_s ? s_[cell] : g_[cell - s_cells];
    for (int v = 0; v < values; ++v) {
      slot = v;
      if (chains_alive() && !descend(cell + 1)) {
        slot = -1;
        return false;
      }
    }
    slot = -1;
    return true;
  }

  int n_, m_;
  bool commutative_only_;
  std::function<bool(const GammaSemigroup&)> visit_;
  std::vector<int> s_, g_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void for_each_structure(const StructureQuery& query,
                        const std::function<bool(const GammaSemigroup&)>& visit) {
  query.validate();
  for (int n = query.n_min; n <= query.n_max; ++n) {
    for (int m = query.m_min; m <= query.m_max; ++m) {
      StructureSearch search(n, m, query.commutative_only, [&](const GammaSemigroup& g) {
        if (query.commutative_only && !g.is_commutative().commutative) return true;
        if (query.dedup_relabel && !is_canonical_under_relabeling(g)) return true;
        return visit(g);
      });
      if (!search.run()) return;
    }
  }
}

std::vector<GammaSemigroup> enumerate_structures(const StructureQuery& query) {
  std::vector<GammaSemigroup> out;
  for_each_structure(query, [&](const GammaSemigroup& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<GammaSemigroup> enumerate_structures_naive(int n, int m) {
  std::vector<GammaSemigroup> out;
  const std::size_t s_cells = static_cast<std::size_t>(n) * m * n;
  const std::size_t g_cells = static_cast<std::size_t>(m) * n * m;
  std::vector<int> s(s_cells, 0), g(g_cells, 0);
  // Odometer over all table pairs, most significant cell first so the scan
  // matches the backtracker's lexicographic order.
  while (true) {
    try {
      out.push_back(GammaSemigroup::build(n, m, s, g));
    } catch (const AssociativityError&) {
    }
    std::size_t i = s_cells + g_cells;
    while (i > 0) {
      --i;
      int& slot = i < s_cells ? s[i] : g[i - s_cells];
      const int limit = i < s_cells ? n : m;
      if (++slot < limit) break;
      slot = 0;
    }
    if (i == 0) {
      const int first = s_cells > 0 ? s[0] : g[0];
      if (first == 0) break;  // wrapped all the way around
    }
  }
  return out;
}

std::int64_t count_structures(int n, int m) {
  StructureQuery q;
  q.n_min = q.n_max = n;
  q.m_min = q.m_max = m;
  std::int64_t count = 0;
  for_each_structure(q, [&](const GammaSemigroup&) {
    ++count;
    return true;
  });
  return count;
}

namespace {

// Grade pairs (i/d, j/d) with i + j <= d, ordered by (i, j).
std::vector<GradePair> grade_pair_menu(int denominator) {
  std::vector<GradePair> menu;
  for (int i = 0; i <= denominator; ++i)
    for (int j = 0; i + j <= denominator; ++j) {
      menu.emplace_back(Grade(Rational(i, denominator)), Grade(Rational(j, denominator)));
    }
  return menu;
}

IFSubset ifs_from_choice(const std::vector<GradePair>& menu, const std::vector<int>& choice) {
  std::vector<Grade> mu(choice.size()), nu(choice.size());
  for (std::size_t x = 0; x < choice.size(); ++x) {
    mu[x] = menu[choice[x]].first;
    nu[x] = menu[choice[x]].second;
  }
  return IFSubset(std::move(mu), std::move(nu));
}

}  // namespace

std::vector<IFSubset> enumerate_ifs(int n, int denominator) {
  if (n < 1) throw ShapeError("carrier size must be positive");
  if (denominator < 1) throw Error("grade denominator must be at least 1");
  const std::vector<GradePair> menu = grade_pair_menu(denominator);
  std::vector<IFSubset> out;
  std::vector<int> choice(n, 0);
  while (true) {
    out.push_back(ifs_from_choice(menu, choice));
    int i = n;
    while (i > 0) {
      --i;
      if (++choice[i] < static_cast<int>(menu.size())) break;
      choice[i] = 0;
    }
    if (i == 0 && choice[0] == 0) break;
  }
  return out;
}

std::vector<IFSubset> sample_ifs(int n, int denominator, std::int64_t count, std::uint64_t seed) {
  if (n < 1) throw ShapeError("carrier size must be positive");
  if (denominator < 1) throw Error("grade denominator must be at least 1");
  if (count < 0) throw Error("sample count must be non-negative");
  const std::vector<GradePair> menu = grade_pair_menu(denominator);
  std::vector<IFSubset> out;
  out.reserve(static_cast<std::size_t>(count));
  std::uint64_t state = seed;
  std::vector<int> choice(n, 0);
  for (std::int64_t k = 0; k < count; ++k) {
    for (int x = 0; x < n; ++x) {
      state = splitmix64(state);
      choice[x] = static_cast<int>(state % menu.size());
    }
    out.push_back(ifs_from_choice(menu, choice));
  }
  return out;
}

std::vector<CrispSubset> enumerate_subsets(int n) {
  std::vector<CrispSubset> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  out.reserve(limit);
  for (std::uint64_t mask = 0; mask < limit; ++mask) out.push_back(CrispSubset::from_mask(n, mask));
  return out;
}

GammaSemigroup relabel(const GammaSemigroup& g, const std::vector<int>& sigma,
                       const std::vector<int>& tau) {
  const int n = g.n(), m = g.m();
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(tau.size()) != m) {
    throw LengthError("permutation length does not match carrier size");
  }
  std::vector<int> s(g.s_table().size()), t(g.g_table().size());
  for (int a = 0; a < n; ++a)
    for (int ga = 0; ga < m; ++ga)
      for (int b = 0; b < n; ++b) {
        s[GammaSemigroup::s_index(n, m, sigma[a], tau[ga], sigma[b])] =
            sigma[g.s_table()[GammaSemigroup::s_index(n, m, a, ga, b)]];
      }
  for (int al = 0; al < m; ++al)
    for (int a = 0; a < n; ++a)
      for (int be = 0; be < m; ++be) {
        t[GammaSemigroup::g_index(n, m, tau[al], sigma[a], tau[be])] =
            tau[g.g_table()[GammaSemigroup::g_index(n, m, al, a, be)]];
      }
  return GammaSemigroup::build(n, m, std::move(s), std::move(t));
}

std::pair<std::vector<int>, std::vector<int>> canonical_tables(const GammaSemigroup& g) {
  std::vector<int> sigma(g.n()), tau(g.m());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::pair<std::vector<int>, std::vector<int>> best{g.s_table(), g.g_table()};
  do {
    std::iota(tau.begin(), tau.end(), 0);
    do {
      const GammaSemigroup r = relabel(g, sigma, tau);
      std::pair<std::vector<int>, std::vector<int>> cand{r.s_table(), r.g_table()};
      if (cand < best) best = std::move(cand);
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

bool is_canonical_under_relabeling(const GammaSemigroup& g) {
  const auto best = canonical_tables(g);
  return best.first == g.s_table() && best.second == g.g_table();
}

}  // namespace gil
