#include "ekr/kneser.hpp"

#include <stdexcept>

namespace ekr {

KneserParams kneser_params(int n, int k) {
  if (n > 64) throw std::invalid_argument("kneser_params: n > 64");
  if (k < 2 || 2 * k > n) throw std::invalid_argument("kneser_params: need 2 <= k <= n/2");
  KneserParams p;
  p.n = n;
  p.k = k;
  p.N = binomial(n, k);
  p.D = binomial(n - k, k);
  p.lambda_min = -binomial(n - k - 1, k - 1);
  p.edge_count = p.N * p.D / 2;
  return p;
}

bool is_edge(const KSubset& a, const KSubset& b) { return disjoint(a, b); }

std::vector<KSubset> neighbors(const KSubset& v) {
  const int n = v.ground_n, k = v.size_k;
  std::vector<int> rest;
  rest.reserve(n - k);
  for (int e = 1; e <= n; ++e)
    if (!v.contains(e)) rest.push_back(e);
  const int m = static_cast<int>(rest.size());
  std::vector<KSubset> out;
  if (k > m) return out;
  const std::uint64_t cnt = binomial_u64(m, k);
  out.reserve(cnt);
  for (std::uint64_t r = 0; r < cnt; ++r) {
    std::uint64_t bits = 0;
    for (int pos : colex_unrank(r, m, k).elements()) bits |= std::uint64_t{1} << (rest[pos - 1] - 1);
    out.push_back(KSubset{bits, n, k});
  }
  return out;
}

std::vector<KSubset> principal_family(int i, int n, int k) {
  if (i < 1 || i > n) throw std::invalid_argument("principal_family: i out of [1..n]");
  std::vector<KSubset> out;
  out.reserve(binomial_u64(n - 1, k - 1));
  const std::uint64_t total = binomial_u64(n, k);
  for (std::uint64_t r = 0; r < total; ++r) {
    KSubset s = colex_unrank(r, n, k);
    if (s.contains(i)) out.push_back(s);
  }
  return out;
}

ExplicitGraph materialize(const KneserParams& params) {
  if (params.N > 10000) throw std::length_error("materialize: N > 10^4");
  const std::uint64_t total = params.N.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> masks(total);
  std::vector<std::uint64_t> ranks(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    masks[r] = colex_unrank(r, params.n, params.k).bits;
    ranks[r] = r;
  }
  ExplicitGraph g(static_cast<int>(total));
  for (std::uint64_t u = 0; u < total; ++u)
    for (std::uint64_t v = u + 1; v < total; ++v)
      if ((masks[u] & masks[v]) == 0) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  g.set_kneser_labels(params.n, params.k, std::move(ranks));
  return g;
}

}  // namespace ekr
