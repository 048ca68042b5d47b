#pragma once

#include <cstdint>
#include <vector>

#include "ekr/bigint.hpp"

namespace ekr {

// Exact C(n,k) for 0 <= k <= n <= 64. Every value fits in a uint64_t
// (C(64,32) < 2^61); throws std::invalid_argument out of range.
std::uint64_t binomial_u64(int n, int k);
BigInt binomial(int n, int k);

// A k-element subset of [1..n], stored as a bit pattern (bit i-1 <=> element i).
// Ground sets are capped at n <= 64 so disjointness is one bitwise test.
struct KSubset {
  std::uint64_t bits = 0;
  int ground_n = 0;
  int size_k = 0;

  bool contains(int element) const {
    return element >= 1 && element <= 64 && (bits >> (element - 1)) & 1u;
  }
  std::vector<int> elements() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
};

// Builds a KSubset from distinct elements of [1..n]; validates the invariants.
KSubset make_ksubset(const std::vector<int>& elements, int n);
KSubset ksubset_from_bits(std::uint64_t bits, int n, int k);

// True iff a and b share no element. Requires matching (ground_n, size_k).
bool disjoint(const KSubset& a, const KSubset& b);

// Colex rank/unrank: mutually inverse bijections with [0, C(n,k)).
std::uint64_t colex_rank(const KSubset& s);
KSubset colex_unrank(std::uint64_t rank, int n, int k);

}  // namespace ekr
