#pragma once

#include <utility>
#include <vector>

#include "ekr/combinatorics.hpp"
#include "ekr/graph.hpp"

namespace ekr {

enum class ISMethod { exact, greedy, deletion, triangle_free_greedy };

struct ISResult {
  int size = 0;
  std::vector<int> witness;  // independent in the source graph
  ISMethod method = ISMethod::exact;
  bool optimal = false;      // only the exact solver sets this
};

struct SolveOptions {
  long long node_budget = 200'000'000;
  // Warm start: a known independent set (vertex indices); validated.
  std::vector<int> initial_witness;
  // A caller-certified upper bound on alpha(g) (e.g. the exact ratio bound
  // for a full Kneser graph). -1 = none. The solver stops as soon as the
  // incumbent meets it.
  long long upper_bound_hint = -1;
};

// Exact maximum independent set: bitset branch-and-bound with a greedy
// clique-cover bound and degree-0/1 reductions. On budget exhaustion the
// best incumbent is returned with optimal=false, never silently.
ISResult max_independent_set(const ExplicitGraph& g, const SolveOptions& opts = {});

// Deletion argument: drop one endpoint per remaining edge, then extend to a
// maximal independent set. Size >= |V| - e(G).
ISResult deletion_lower_bound(const ExplicitGraph& g);

// Removes the lowest-index vertex of the lexicographically first triangle
// until triangle-free. Returns (reduced graph, removed original indices).
std::pair<ExplicitGraph, std::vector<int>> triangle_free_reduce(const ExplicitGraph& g);

// Minimum-degree greedy (Caro-Wei): repeatedly take a minimum-degree vertex
// and delete its closed neighborhood. Ties by smallest index.
ISResult degree_greedy_is(const ExplicitGraph& g);

struct ShearerBound {
  double main;  // N (D ln D - D + 1) / (D-1)^2
  double weak;  // N (ln D - 1) / D
};
ShearerBound shearer_bound(double N, double D);  // requires D > 1

// Distance from a family of k-subsets to the nearest star:
// (argmin_i |F \ F_i|, that minimum). Ties -> smallest i.
std::pair<int, long long> stability_distance(const std::vector<KSubset>& F, int n);

// Caro-Wei sum ceil(sum_v 1/(deg(v)+1)) as an exact floor for the greedy.
long long caro_wei_floor(const ExplicitGraph& g);

}  // namespace ekr
