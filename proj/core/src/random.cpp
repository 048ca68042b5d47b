#include "ekr/random.hpp"

#include <cmath>
#include <stdexcept>

#include "ekr/combinatorics.hpp"
#include "ekr/kneser.hpp"

namespace ekr {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_a, std::uint64_t stream_b) {
  SplitMix64 rng(master ^ (0x9E3779B97F4A7C15ull * (stream_a + 1)));
  std::uint64_t mixed = rng.next() ^ (0xBF58476D1CE4E5B9ull * (stream_b + 1));
  return SplitMix64(mixed).next();
}

std::vector<std::uint64_t> sample_ranks(std::uint64_t N, double p, std::uint64_t seed) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("sample_ranks: p in (0,1] required");
  std::vector<std::uint64_t> out;
  if (p == 1.0) {
    out.resize(N);
    for (std::uint64_t r = 0; r < N; ++r) out[r] = r;
    return out;
  }
  SplitMix64 rng(seed);
  const double log1mp = std::log1p(-p);
  std::uint64_t cursor = 0;  // next candidate rank
  while (cursor < N) {
    double u = rng.next_double();
    if (u <= 0.0) u = 0x1.0p-53;
    const double skip = std::floor(std::log(u) / log1mp);  // failures before a success
    if (!(skip < static_cast<double>(N - cursor))) break;
    cursor += static_cast<std::uint64_t>(skip);
    out.push_back(cursor);
    ++cursor;
  }
  return out;
}

std::vector<std::uint64_t> sample_vertices(const SampleSpec& spec) {
  return sample_ranks(binomial_u64(spec.n, spec.k), spec.p, spec.seed);
}

ExplicitGraph induced_subgraph(const std::vector<std::uint64_t>& ranks, int n, int k) {
  const int m = static_cast<int>(ranks.size());
  std::vector<std::uint64_t> masks(m);
  for (int i = 0; i < m; ++i) masks[i] = colex_unrank(ranks[i], n, k).bits;
  ExplicitGraph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if ((masks[u] & masks[v]) == 0) g.add_edge(u, v);
  g.set_kneser_labels(n, k, ranks);
  return g;
}

double chernoff_upper(const TailBoundQuery& q) {
  if (q.m < 0 || q.zeta < 0 || q.zeta > 1 || q.s < 0)
    throw std::invalid_argument("chernoff: invalid query");
  if (q.s == 0) return 1.0;
  const double denom = 2.0 * q.zeta * q.m + q.s / 3.0;
  return std::exp(-q.s * q.s / denom);
}

double chernoff_lower(const TailBoundQuery& q) {
  if (q.m < 0 || q.zeta < 0 || q.zeta > 1 || q.s < 0)
    throw std::invalid_argument("chernoff: invalid query");
  if (q.s == 0) return 1.0;
  if (q.zeta == 0) return 0.0;  // infinite exponent, by convention
  return std::exp(-q.s * q.s / (2.0 * q.zeta * q.m));
}

EdgeMoments edge_count_moments(int n, int k, double p) {
  const double N = static_cast<double>(binomial_u64(n, k));
  const double D = static_cast<double>(binomial_u64(n - k, k));
  return EdgeMoments{p * p * N * D / 2.0, 2.0 * p * p * p * N * N * D + p * p * N * D};
}

double expected_triangles_upper(int n, int k, double p) {
  if (n < 3 * k) return 0.0;
  const double N = static_cast<double>(binomial_u64(n, k));
  const double D = static_cast<double>(binomial_u64(n - k, k));
  const double T = static_cast<double>(binomial_u64(n - 2 * k, k));
  return p * p * p * N * D * T;
}

}  // namespace ekr
