#include "ekr/containers.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ekr {
namespace {

BigInt bigint_binomial(const BigInt& n, long long k) {
  if (k < 0 || n < k) return 0;
  BigInt num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

// deg < 2*gamma*|S|*e(G)/N^2, exact; an edgeless graph is sparse by definition.
bool sparse_branch(long long deg, long long S_size, const Rational& gamma, const BigInt& edge_count,
                   const BigInt& N) {
  if (edge_count == 0) return true;
  BigInt lhs = BigInt(deg) * denominator(gamma) * N * N;
  BigInt rhs = 2 * numerator(gamma) * S_size * edge_count;
  return lhs < rhs;
}

struct Step {
  int x;
  BranchTag tag;
  long long size_after;
};

// One container step on X (modified in place). `position` is the index j of
// the chosen vertex within the max-ordering of X.
Step container_step(const ExplicitGraph& g, VertexSet& X, const std::vector<int>& order,
                    int position, const Rational& gamma) {
  const BigInt N = g.vertex_count();
  const int x = order[position];
  for (int idx = 0; idx <= position; ++idx) X.reset(order[idx]);  // S
  const long long deg = g.degree_within(x, X);
  Step step;
  step.x = x;
  if (sparse_branch(deg, X.count(), gamma, g.edge_count(), N)) {
    step.tag = BranchTag::sparse;
  } else {
    step.tag = BranchTag::shrink;
    X -= g.adjacency_row(x);
  }
  step.size_after = X.count();
  return step;
}

Rational shrink_factor(const ExplicitGraph& g, const Rational& gamma) {
  const BigInt N = g.vertex_count();
  return 1 - 2 * gamma * Rational(g.edge_count()) / Rational(N * N);
}

}  // namespace

std::vector<int> max_ordering(const ExplicitGraph& g, const VertexSet& X) {
  VertexSet rest = X;
  std::vector<int> order;
  order.reserve(rest.count());
  while (!rest.empty()) {
    int pick = -1, pick_deg = -1;
    for (int v = rest.next(0); v >= 0; v = rest.next(v + 1)) {
      const int d = g.degree_within(v, rest);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    order.push_back(pick);
    rest.reset(pick);
  }
  return order;
}

ContainerCertificate fingerprint(const ExplicitGraph& g, const std::vector<int>& I,
                                 const ContainerConfig& cfg) {
  if (cfg.ell < 1 || cfg.ell >= cfg.t) throw std::invalid_argument("fingerprint: need 0 < ell < t");
  if (static_cast<int>(I.size()) < cfg.t) throw std::invalid_argument("fingerprint: |I| < t");
  for (std::size_t i = 0; i < I.size(); ++i)
    for (std::size_t j = i + 1; j < I.size(); ++j)
      if (g.has_edge(I[i], I[j])) throw std::invalid_argument("fingerprint: I is not independent");

  VertexSet in_I(g.vertex_count());
  for (int v : I) in_I.set(v);

  ContainerCertificate cert;
  VertexSet X = VertexSet::full(g.vertex_count());
  bool all_shrink = true;
  for (int i = 0; i < cfg.ell; ++i) {
    const std::vector<int> order = max_ordering(g, X);
    int position = -1;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (in_I.test(order[j])) {
        position = static_cast<int>(j);
        break;
      }
    }
    // guaranteed: I \ {x_1..x_{i}} is contained in X and |I| > ell
    const Step step = container_step(g, X, order, position, cfg.gamma);
    cert.fingerprint.push_back(step.x);
    cert.branch.push_back(step.tag);
    cert.chain_sizes.push_back(step.size_after);
    if (step.tag == BranchTag::sparse) all_shrink = false;
  }
  cert.container = X.to_vector();
  if (all_shrink) {
    Rational f = shrink_factor(g, cfg.gamma);
    Rational nu = 1;
    for (int i = 0; i < cfg.ell; ++i) nu *= f;
    cert.nu = nu;
  } else {
    cert.nu = Rational(static_cast<long long>(cert.container.size()), g.vertex_count());
  }
  return cert;
}

std::vector<int> reconstruct(const ExplicitGraph& g, const std::vector<int>& L,
                             const ContainerConfig& cfg) {
  VertexSet X = VertexSet::full(g.vertex_count());
  for (int x : L) {
    if (!X.test(x)) throw std::runtime_error("reconstruct: fingerprint inconsistent with replay");
    const std::vector<int> order = max_ordering(g, X);
    int position = -1;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (order[j] == x) {
        position = static_cast<int>(j);
        break;
      }
    }
    container_step(g, X, order, position, cfg.gamma);
  }
  return X.to_vector();
}

std::vector<VertexSet> container_chain(const ExplicitGraph& g, const std::vector<int>& L,
                                       const ContainerConfig& cfg) {
  std::vector<VertexSet> chain;
  VertexSet X = VertexSet::full(g.vertex_count());
  for (int x : L) {
    if (!X.test(x)) throw std::runtime_error("container_chain: fingerprint inconsistent with replay");
    const std::vector<int> order = max_ordering(g, X);
    int position = -1;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (order[j] == x) {
        position = static_cast<int>(j);
        break;
      }
    }
    container_step(g, X, order, position, cfg.gamma);
    chain.push_back(X);
  }
  return chain;
}

Rational container_bound_nu(const BigInt& N, const BigInt& edge_count, const ContainerConfig& cfg,
                            const SupersatParams& supersat) {
  Rational factor = 1 - 2 * cfg.gamma * Rational(edge_count) / Rational(N * N);
  Rational power = 1;
  for (int i = 0; i < cfg.ell; ++i) power *= factor;
  return power > supersat.lambda ? power : supersat.lambda;
}

BigInt count_independent_sets_bound(const BigInt& N, const ContainerConfig& cfg,
                                    const Rational& nu) {
  const long long rest = cfg.t - cfg.ell;
  Rational nuN = nu * Rational(N);
  BigInt floor_nuN = numerator(nuN) / denominator(nuN);
  if (nu < 0) floor_nuN = 0;
  return bigint_binomial(N, cfg.ell) * bigint_binomial(floor_nuN, rest);
}

int canonical_stability_ell(const BigInt& N, const BigInt& edge_count, const Rational& lambda,
                            const Rational& delta) {
  if (edge_count == 0) throw std::invalid_argument("canonical_stability_ell: e(G) = 0");
  const double target = to_double((1 - delta) * lambda);
  if (!(target > 0.0 && target < 1.0))
    throw std::invalid_argument("canonical_stability_ell: (1-delta)*lambda outside (0,1)");
  const double num = std::log(1.0 / target) * to_double(N) * to_double(N);
  const double den = 2.0 * to_double(delta) * to_double(BigInt(edge_count));
  return static_cast<int>(std::ceil(num / den));
}

StabilityCertificate stability_container(const ExplicitGraph& g, const std::vector<int>& I,
                                         const StabilityFamily& stab, const ContainerConfig& cfg) {
  if (stab.members.empty()) throw std::invalid_argument("stability_container: empty family");
  StabilityCertificate out;

  VertexSet in_I(g.vertex_count());
  for (int v : I) in_I.set(v);
  VertexSet X = VertexSet::full(g.vertex_count());
  for (int i = 0; i < cfg.ell; ++i) {
    const std::vector<int> order = max_ordering(g, X);
    int position = -1;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (in_I.test(order[j])) {
        position = static_cast<int>(j);
        break;
      }
    }
    if (position < 0) throw std::invalid_argument("stability_container: I exhausted before ell steps");
    const Step step = container_step(g, X, order, position, cfg.gamma);
    out.cert.fingerprint.push_back(step.x);
    out.cert.branch.push_back(step.tag);
    out.cert.chain_sizes.push_back(step.size_after);
    if (step.tag == BranchTag::sparse) break;  // P(L) := first sparse X_j
  }
  out.cert.container = X.to_vector();
  const BigInt N = g.vertex_count();
  out.cert.nu = Rational(static_cast<long long>(out.cert.container.size()), N);

  // Disjunct 1: |P| <= (1 - delta) * lambda * N.
  const Rational size_P = static_cast<long long>(out.cert.container.size());
  if (size_P <= (1 - stab.delta) * stab.lambda * Rational(N)) {
    out.tag = StabilityTag::small_container;
    return out;
  }
  // Disjunct 2: |P \ B| <= epsilon * lambda * N for some B.
  long long best_excess = -1;
  int best_index = -1;
  for (std::size_t b = 0; b < stab.members.size(); ++b) {
    VertexSet member(g.vertex_count());
    for (int v : stab.members[b]) member.set(v);
    long long excess = 0;
    for (int v : out.cert.container)
      if (!member.test(v)) ++excess;
    if (best_excess < 0 || excess < best_excess) {
      best_excess = excess;
      best_index = static_cast<int>(b);
    }
  }
  if (Rational(best_excess) <= stab.epsilon * stab.lambda * Rational(N)) {
    out.tag = StabilityTag::near_member;
    out.member_index = best_index;
    return out;
  }
  throw std::runtime_error("stability_container: neither disjunct holds (stability violated)");
}

std::string serialize_certificate(const ContainerCertificate& cert) {
  std::ostringstream out;
  out << "L:";
  for (int x : cert.fingerprint) out << ' ' << x;
  out << "\nP:";
  for (int v : cert.container) out << ' ' << v;
  out << "\nbranch:";
  for (BranchTag tag : cert.branch) out << ' ' << (tag == BranchTag::sparse ? 's' : 'k');
  out << "\nnu: " << numerator(cert.nu) << '/' << denominator(cert.nu) << '\n';
  return out.str();
}

ContainerCertificate parse_certificate(const std::string& text) {
  ContainerCertificate cert;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "L:") {
      int v;
      while (ls >> v) cert.fingerprint.push_back(v);
    } else if (tag == "P:") {
      int v;
      while (ls >> v) cert.container.push_back(v);
    } else if (tag == "branch:") {
      char c;
      while (ls >> c) cert.branch.push_back(c == 's' ? BranchTag::sparse : BranchTag::shrink);
    } else if (tag == "nu:") {
      std::string frac;
      ls >> frac;
      auto slash = frac.find('/');
      if (slash == std::string::npos) throw std::runtime_error("certificate: bad nu line");
      cert.nu = Rational(BigInt(frac.substr(0, slash)), BigInt(frac.substr(slash + 1)));
    } else if (!tag.empty()) {
      throw std::runtime_error("certificate: unknown line tag '" + tag + "'");
    }
  }
  return cert;
}

}  // namespace ekr
