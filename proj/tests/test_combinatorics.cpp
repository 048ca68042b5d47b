#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ekr/combinatorics.hpp"

using namespace ekr;

namespace {

// Independent oracle: multiplicative formula with exact division step by step.
std::uint64_t binom_oracle(int n, int k) {
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// All k-subsets of [1..n] in colex order: sorted by bitmask value.
std::vector<std::uint64_t> all_masks(int n, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (__builtin_popcountll(m) == k) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("binomial agrees with the multiplicative oracle") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial_u64(n, k) == binom_oracle(n, k));
  CHECK(binomial_u64(64, 32) == 1832624140942590534ull);
  CHECK(binomial(12, 3) == 220);
}

TEST_CASE("binomial rejects out-of-range arguments") {
  CHECK_THROWS_AS(binomial_u64(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial_u64(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(binomial_u64(65, 2), std::invalid_argument);
  CHECK_THROWS_AS(binomial_u64(3, -1), std::invalid_argument);
}

TEST_CASE("colex rank/unrank is a bijection onto bitmask order") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::uint64_t> masks = all_masks(n, k);
      REQUIRE(masks.size() == binomial_u64(n, k));
      // colex order on sets == numeric order on bitmasks
      REQUIRE(std::is_sorted(masks.begin(), masks.end()));
      for (std::uint64_t r = 0; r < masks.size(); ++r) {
        KSubset s = colex_unrank(r, n, k);
        CHECK(s.bits == masks[r]);
        CHECK(colex_rank(s) == r);
      }
    }
  }
}

TEST_CASE("colex_unrank rejects out-of-range ranks") {
  CHECK_THROWS_AS(colex_unrank(10, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(colex_unrank(0, 2, 3), std::invalid_argument);
}

TEST_CASE("KSubset construction and membership") {
  KSubset s = make_ksubset({2, 5, 7}, 9);
  CHECK(s.size_k == 3);
  CHECK(s.contains(2));
  CHECK(s.contains(7));
  CHECK(!s.contains(3));
  CHECK(s.elements() == std::vector<int>{2, 5, 7});
  CHECK_THROWS_AS(make_ksubset({0, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_ksubset({1, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_ksubset({6}, 5), std::invalid_argument);
  CHECK_THROWS_AS(ksubset_from_bits(0b111, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(ksubset_from_bits(0b100000, 5, 1), std::invalid_argument);
}

TEST_CASE("disjointness") {
  KSubset a = make_ksubset({1, 2}, 5);
  KSubset b = make_ksubset({3, 4}, 5);
  KSubset c = make_ksubset({2, 3}, 5);
  CHECK(disjoint(a, b));
  CHECK(!disjoint(a, c));
  KSubset other = make_ksubset({1, 2}, 6);
  CHECK_THROWS_AS(disjoint(a, other), std::invalid_argument);
}
