#include "ekr/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ekr/indep.hpp"
#include "ekr/random.hpp"

namespace ekr {

Rational hoffman_lower_bound(const BigInt& N, const BigInt& D, const BigInt& lambda_min,
                             const BigInt& edge_count, const BigInt& s) {
  if (s <= 0) throw std::invalid_argument("hoffman_lower_bound: s >= 1 required");
  if (s > N) throw std::invalid_argument("hoffman_lower_bound: s > N");
  Rational coeff = Rational(lambda_min * N, D * s) + Rational(D - lambda_min, D);
  return coeff * Rational(s * s, N * N) * Rational(edge_count);
}

Rational hoffman_lower_bound(const KneserParams& p, const BigInt& s) {
  return hoffman_lower_bound(p.N, p.D, p.lambda_min, p.edge_count, s);
}

SupersatParams kneser_supersat_params(int n, int k, const Rational& tau) {
  if (tau <= 0) throw std::invalid_argument("kneser_supersat_params: tau > 0 required");
  Rational lambda = (1 + tau) * Rational(k, n);
  if (lambda > 1) throw std::invalid_argument("kneser_supersat_params: (1+tau)k/n > 1, certificate vacuous");
  return SupersatParams{lambda, tau / (1 + tau), tau};
}

namespace {

// s >= lambda * N as integers: smallest s meeting the threshold.
int threshold_size(const Rational& lambda, int N) {
  BigInt num = numerator(lambda) * N;
  BigInt den = denominator(lambda);
  BigInt s = (num + den - 1) / den;
  return static_cast<int>(s.convert_to<long long>());
}

// e(S) * den_gamma * N^2 >= num_gamma * s^2 * e(G), all in long long
// (corpus graphs are small; overflow-checked at setup).
struct SupersatInequality {
  long long lhs_factor;                 // den_gamma * N^2
  std::vector<long long> rhs_by_size;   // num_gamma * s^2 * e(G)

  bool holds(long long e_S, int s) const { return lhs_factor * e_S >= rhs_by_size[s]; }
};

SupersatInequality make_inequality(const ExplicitGraph& g, const SupersatParams& params) {
  const long long N = g.vertex_count();
  const long long num = numerator(params.gamma).convert_to<long long>();
  const long long den = denominator(params.gamma).convert_to<long long>();
  SupersatInequality ineq;
  ineq.lhs_factor = den * N * N;
  ineq.rhs_by_size.resize(N + 1);
  for (long long s = 0; s <= N; ++s) ineq.rhs_by_size[s] = num * s * s * g.edge_count();
  return ineq;
}

}  // namespace

SupersatCheck verify_supersaturation(const ExplicitGraph& g, const SupersatParams& params) {
  const int N = g.vertex_count();
  if (N > 24) throw std::invalid_argument("verify_supersaturation: > 24 vertices needs the sampled mode");
  const int smin = threshold_size(params.lambda, N);
  const auto ineq = make_inequality(g, params);

  std::vector<std::uint32_t> rows(N);
  for (int v = 0; v < N; ++v)
    for (int u : g.neighbors(v)) rows[v] |= std::uint32_t{1} << u;

  const std::uint64_t limit = std::uint64_t{1} << N;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int s = std::popcount(mask);
    if (s < smin || s == 0) continue;
    long long twice = 0;
    for (std::uint32_t m = static_cast<std::uint32_t>(mask); m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      twice += std::popcount(rows[v] & static_cast<std::uint32_t>(mask));
    }
    if (!ineq.holds(twice / 2, s)) {
      SupersatCheck out;
      out.status = SupersatCheck::Status::violated;
      for (int v = 0; v < N; ++v)
        if ((mask >> v) & 1u) out.witness.push_back(v);
      return out;
    }
  }
  return SupersatCheck{};
}

SupersatCheck verify_supersaturation_sampled(const ExplicitGraph& g, const SupersatParams& params,
                                             int budget, std::uint64_t seed) {
  const int N = g.vertex_count();
  const int smin = threshold_size(params.lambda, N);
  const auto ineq = make_inequality(g, params);

  auto check_set = [&](const std::vector<int>& verts) -> bool {
    VertexSet s(N);
    for (int v : verts) s.set(v);
    return ineq.holds(g.edges_within(s), s.count());
  };
  auto pad_to_threshold = [&](std::vector<int> verts) {
    VertexSet in(N);
    for (int v : verts) in.set(v);
    for (int v = 0; v < N && static_cast<int>(verts.size()) < smin; ++v)
      if (!in.test(v)) verts.push_back(v);
    return verts;
  };

  SupersatCheck out;
  out.status = SupersatCheck::Status::no_violation_found;

  // Near-independent sets are the likely violators; try them first.
  std::vector<std::vector<int>> candidates;
  candidates.push_back(pad_to_threshold(degree_greedy_is(g).witness));
  candidates.push_back(pad_to_threshold(deletion_lower_bound(g).witness));
  for (auto& cand : candidates) {
    if (static_cast<int>(cand.size()) < smin) continue;
    if (!check_set(cand)) {
      out.status = SupersatCheck::Status::violated;
      out.witness = cand;
      return out;
    }
  }

  SplitMix64 rng(seed);
  std::vector<int> pool(N);
  for (int v = 0; v < N; ++v) pool[v] = v;
  for (int trial = 0; trial < budget; ++trial) {
    // random smin-subset via partial Fisher-Yates
    for (int i = 0; i < smin; ++i) {
      int j = i + static_cast<int>(rng.next() % (N - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> sample(pool.begin(), pool.begin() + smin);
    if (!check_set(sample)) {
      out.status = SupersatCheck::Status::violated;
      out.witness = sample;
      return out;
    }
  }
  return out;
}

SpectrumExtremes adjacency_spectrum_extremes(const ExplicitGraph& g) {
  const int N = g.vertex_count();
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(N, N);
  for (auto [u, v] : g.edges()) {
    adj(u, v) = 1.0;
    adj(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return SpectrumExtremes{ev(0), ev(N - 1)};
}

bool verify_hoffman(const ExplicitGraph& g) {
  const int N = g.vertex_count();
  if (N > 24) throw std::invalid_argument("verify_hoffman: > 24 vertices");
  if (!g.is_regular()) throw std::invalid_argument("verify_hoffman: graph must be regular");
  if (g.edge_count() == 0) return true;
  const double lambda_min = adjacency_spectrum_extremes(g).lambda_min;
  const double D = g.degree(0);
  const double eG = static_cast<double>(g.edge_count());

  std::vector<std::uint32_t> rows(N);
  for (int v = 0; v < N; ++v)
    for (int u : g.neighbors(v)) rows[v] |= std::uint32_t{1} << u;

  const std::uint64_t limit = std::uint64_t{1} << N;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const int s = std::popcount(mask);
    long long twice = 0;
    for (std::uint32_t m = static_cast<std::uint32_t>(mask); m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      twice += std::popcount(rows[v] & static_cast<std::uint32_t>(mask));
    }
    const double ratio = static_cast<double>(s) / N;
    const double bound =
        (lambda_min / D * (N / static_cast<double>(s)) + (D - lambda_min) / D) * ratio * ratio * eG;
    if (static_cast<double>(twice / 2) < bound - 1e-6) return false;
  }
  return true;
}

}  // namespace ekr
