#pragma once

#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/combinatorics.hpp"
#include "ekr/graph.hpp"

namespace ekr {

// Exact parameters of the Kneser graph K(n,k): vertices are the k-subsets
// of [n], edges join disjoint pairs. D-regular with D = C(n-k,k), smallest
// adjacency eigenvalue -C(n-k-1,k-1).
struct KneserParams {
  int n = 0;
  int k = 0;
  BigInt N;           // C(n,k)
  BigInt D;           // C(n-k,k)
  BigInt lambda_min;  // -C(n-k-1,k-1) = -(k/(n-k)) D
  BigInt edge_count;  // N*D/2
};

// Requires 2 <= k <= n/2, n <= 64.
KneserParams kneser_params(int n, int k);

bool is_edge(const KSubset& a, const KSubset& b);

// The D = C(n-k,k) neighbors of v: all k-subsets of [n] \ v, colex order.
std::vector<KSubset> neighbors(const KSubset& v);

// The star F_i: all k-subsets containing element i. Size C(n-1,k-1).
std::vector<KSubset> principal_family(int i, int n, int k);

// Full K(n,k) with vertex indices = colex ranks. Requires N <= 10^4.
ExplicitGraph materialize(const KneserParams& params);

}  // namespace ekr
