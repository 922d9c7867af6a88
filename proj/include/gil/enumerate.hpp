#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gil/gamma_semigroup.hpp"
#include "gil/ifs.hpp"

namespace gil {

// Parameters of an instance-space run: which structure sizes to enumerate,
// how to discretize grades, and how to supply IF subsets and crisp subsets.
struct StructureQuery {
  int n_min = 1, n_max = 1;
  int m_min = 1, m_max = 1;
  bool commutative_only = false;
  bool dedup_relabel = false;
  int grade_denominator = 1;

  enum class IfsMode { Exhaustive, Random };
  IfsMode ifs_mode = IfsMode::Exhaustive;
  std::int64_t random_count = 0;  // draws per structure in Random mode
  std::uint64_t seed = 0;

  enum class SubsetMode { Exhaustive, None };
  SubsetMode subset_mode = SubsetMode::Exhaustive;

  void validate() const;
};

// Streams every structure of the query's size range in lexicographic table
// order (s_table first, then g_table), via associativity-pruned backtracking:
// cells are assigned one at a time and a branch dies as soon as any chain
// instance is fully determined and violated. Return false from the visitor to
// stop early. Every emitted structure has passed GammaSemigroup::build.
void for_each_structure(const StructureQuery& query,
                        const std::function<bool(const GammaSemigroup&)>& visit);

std::vector<GammaSemigroup> enumerate_structures(const StructureQuery& query);

// Test oracle: generate every table pair of the exact size and keep the ones
// build() accepts. No pruning, no dedup.
std::vector<GammaSemigroup> enumerate_structures_naive(int n, int m);

std::int64_t count_structures(int n, int m);

// Every (mu, nu) with all grades in {0, 1/d, ..., 1} and mu + nu <= 1
// pointwise, in lexicographic point-then-pair order. (d+1)(d+2)/2 pairs per
// point.
std::vector<IFSubset> enumerate_ifs(int n, int denominator);

// Seeded uniform draws from the same grid; identical seed gives an identical
// sequence.
std::vector<IFSubset> sample_ifs(int n, int denominator, std::int64_t count, std::uint64_t seed);

// All 2^n subsets in mask order.
std::vector<CrispSubset> enumerate_subsets(int n);

// Canonical-form machinery for dedup under simultaneous relabeling of S and
// Gamma. sigma and tau are permutations given as images (sigma[i] = new name
// of i).
GammaSemigroup relabel(const GammaSemigroup& g, const std::vector<int>& sigma,
                       const std::vector<int>& tau);
std::pair<std::vector<int>, std::vector<int>> canonical_tables(const GammaSemigroup& g);
bool is_canonical_under_relabeling(const GammaSemigroup& g);

}  // namespace gil
