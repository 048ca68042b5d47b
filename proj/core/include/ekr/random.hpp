#pragma once

#include <cstdint>
#include <vector>

#include "ekr/graph.hpp"

namespace ekr {

// SplitMix64 (Steele, Lea, Flood 2014): the repo-wide generator. Chosen for
// its published constants and byte-identical output on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Seed splitting rule for independent trials: two SplitMix64 scrambles of
// (master, stream_a, stream_b). Deterministic and order-independent.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_a, std::uint64_t stream_b);

struct SampleSpec {
  int n = 0;
  int k = 0;
  double p = 0.0;  // in (0,1]
  std::uint64_t seed = 0;
};

// Binomial vertex sample V_p of K(n,k) as sorted colex ranks. Geometric
// skip-sampling, O(pN) work. Deterministic per spec.
std::vector<std::uint64_t> sample_ranks(std::uint64_t N, double p, std::uint64_t seed);
std::vector<std::uint64_t> sample_vertices(const SampleSpec& spec);

// Induced subgraph of K(n,k) on the sampled ranks (edges = disjoint pairs).
ExplicitGraph induced_subgraph(const std::vector<std::uint64_t>& ranks, int n, int k);

struct TailBoundQuery {
  long long m = 0;   // trials
  double zeta = 0;   // success probability
  double s = 0;      // deviation >= 0
};

// P(Bin(m, zeta) >= m*zeta + s) <= exp(-s^2 / (2*zeta*m + s/3))
double chernoff_upper(const TailBoundQuery& q);
// P(Bin(m, zeta) <= m*zeta - s) <= exp(-s^2 / (2*zeta*m)); 0 when zeta=0, s>0
double chernoff_lower(const TailBoundQuery& q);

struct EdgeMoments {
  double mean;            // p^2 N D / 2
  double variance_upper;  // 2 p^3 N^2 D + p^2 N D
};
EdgeMoments edge_count_moments(int n, int k, double p);

// Upper bound p^3 * C(n,k) * C(n-k,k) * C(n-2k,k) on the expected number of
// sampled triangles; 0 when n < 3k (the Kneser graph is triangle-free).
double expected_triangles_upper(int n, int k, double p);

}  // namespace ekr
