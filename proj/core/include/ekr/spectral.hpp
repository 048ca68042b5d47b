#pragma once

#include <cstdint>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/graph.hpp"
#include "ekr/kneser.hpp"

namespace ekr {

// (lambda, gamma)-supersaturation parameters; tau is the generator when the
// certificate comes from the Kneser construction, else 0.
struct SupersatParams {
  Rational lambda;
  Rational gamma;
  Rational tau;
};

// Hoffman-type lower bound on the edges spanned by an s-subset of a
// D-regular graph with smallest eigenvalue lambda_min:
//   (lambda_min/D * N/s + (D - lambda_min)/D) * (s/N)^2 * e(G).
// Exact rational; may be negative for small s (callers clamp).
Rational hoffman_lower_bound(const BigInt& N, const BigInt& D, const BigInt& lambda_min,
                             const BigInt& edge_count, const BigInt& s);
Rational hoffman_lower_bound(const KneserParams& params, const BigInt& s);

// K(n,k) is ((1+tau) k/n, tau/(1+tau))-supersaturated for any tau > 0
// with (1+tau) k/n <= 1.
SupersatParams kneser_supersat_params(int n, int k, const Rational& tau);

struct SupersatCheck {
  enum class Status { verified, no_violation_found, violated };
  Status status = Status::verified;
  std::vector<int> witness;  // a violating S, when status == violated

  bool ok() const { return status != Status::violated; }
};

// Exhaustive scan over all S with |S| >= lambda*N; requires <= 24 vertices.
SupersatCheck verify_supersaturation(const ExplicitGraph& g, const SupersatParams& params);

// Randomized refutation for larger graphs: candidate witnesses from the
// independent-set heuristics are tried first, then `budget` random subsets
// at the threshold size. Can only ever report no_violation_found/violated.
SupersatCheck verify_supersaturation_sampled(const ExplicitGraph& g, const SupersatParams& params,
                                             int budget, std::uint64_t seed);

// Test-oracle: checks e(S) >= hoffman_lower_bound(|S|) for every subset S,
// with lambda_min computed numerically. Requires a regular graph, <= 24 vertices.
bool verify_hoffman(const ExplicitGraph& g);

// Dense symmetric eigensolve of the adjacency matrix (oracle use only).
struct SpectrumExtremes {
  double lambda_min;
  double lambda_max;
};
SpectrumExtremes adjacency_spectrum_extremes(const ExplicitGraph& g);

}  // namespace ekr
