#pragma once

#include <string>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/graph.hpp"
#include "ekr/spectral.hpp"

namespace ekr {

struct ContainerConfig {
  Rational gamma;  // density parameter (delta when instantiating stability)
  int ell = 1;     // fingerprint length, 0 < ell < t
  int t = 2;       // target independent-set size
};

enum class BranchTag { shrink, sparse };

struct ContainerCertificate {
  std::vector<int> fingerprint;        // x_1..x_ell, in selection order
  std::vector<int> container;          // P(L), ascending vertex indices
  std::vector<long long> chain_sizes;  // |X_1|..|X_ell|, non-increasing
  std::vector<BranchTag> branch;       // per-step tag
  Rational nu;                         // size bound: |container| <= nu * N
};

// Max-ordering of X: v_i has maximum degree into {v_{i+1},...} among the
// rest; ties broken by smallest vertex index.
std::vector<int> max_ordering(const ExplicitGraph& g, const VertexSet& X);

// The fingerprint algorithm. Step i: max-order X_{i-1}; let v_j be the first
// ordered vertex in I; x_i = v_j; S = X_{i-1} minus v_1..v_j; branch sparse
// (X_i = S) when deg(v_j, S) < 2*gamma*|S|*e(G)/N^2, else shrink
// (X_i = S \ N(v_j)). Requires I independent with |I| >= t > ell.
ContainerCertificate fingerprint(const ExplicitGraph& g, const std::vector<int>& I,
                                 const ContainerConfig& cfg);

// Replays the step rule from the fingerprint alone (no access to I);
// deterministic. Throws if some x_i is absent from the current X_{i-1}.
std::vector<int> reconstruct(const ExplicitGraph& g, const std::vector<int>& L,
                             const ContainerConfig& cfg);

// Same replay, returning the whole chain X_1..X_|L| (X_0 = V implicit).
std::vector<VertexSet> container_chain(const ExplicitGraph& g, const std::vector<int>& L,
                                       const ContainerConfig& cfg);

// nu = max((1 - 2*gamma*e(G)/N^2)^ell, lambda).
Rational container_bound_nu(const BigInt& N, const BigInt& edge_count, const ContainerConfig& cfg,
                            const SupersatParams& supersat);

// |I_G(t)| <= C(N, ell) * C(floor(nu*N), t - ell); exact.
BigInt count_independent_sets_bound(const BigInt& N, const ContainerConfig& cfg, const Rational& nu);

// Family of candidate extremal structures (for Kneser: the n stars).
struct StabilityFamily {
  std::vector<std::vector<int>> members;
  Rational lambda;
  Rational epsilon;
  Rational delta;
};

enum class StabilityTag { small_container, near_member };

struct StabilityCertificate {
  ContainerCertificate cert;  // container is X_ell or the first sparse X_j
  StabilityTag tag = StabilityTag::small_container;
  int member_index = -1;  // witnessing B, when tag == near_member
};

// Stability container: run the fingerprint with gamma = delta, truncating
// at the first sparse step, then verify one of the two disjuncts:
// |P| <= (1-delta)*lambda*N, or |P \ B| <= epsilon*lambda*N for some B.
// Throws std::runtime_error when neither holds (stability precondition failed).
StabilityCertificate stability_container(const ExplicitGraph& g, const std::vector<int>& I,
                                         const StabilityFamily& stab, const ContainerConfig& cfg);

// Canonical ell = ceil(ln(1/((1-delta)*lambda)) * N^2 / (2*delta*e(G))).
int canonical_stability_ell(const BigInt& N, const BigInt& edge_count, const Rational& lambda,
                            const Rational& delta);

// Line-oriented text format: "L: ...", "P: ...", "branch: s|k ...", "nu: p/q".
std::string serialize_certificate(const ContainerCertificate& cert);
ContainerCertificate parse_certificate(const std::string& text);

}  // namespace ekr
