#include "ekr/indep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ekr/bigint.hpp"

namespace ekr {
namespace {

bool is_independent(const ExplicitGraph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) return false;
  return true;
}

struct Solver {
  const ExplicitGraph& g;
  long long budget;
  long long ub_hint;
  long long nodes = 0;
  bool aborted = false;
  int best = -1;
  std::vector<int> best_set;
  std::vector<int> cur;

  explicit Solver(const ExplicitGraph& graph, const SolveOptions& opts)
      : g(graph), budget(opts.node_budget), ub_hint(opts.upper_bound_hint) {}

  bool bound_met() const { return ub_hint >= 0 && best >= ub_hint; }

  void record_if_better() {
    if (static_cast<int>(cur.size()) > best) {
      best = static_cast<int>(cur.size());
      best_set = cur;
    }
  }

  // Greedy clique partition of P: each clique contributes at most one
  // vertex to any independent set, so the clique count bounds alpha(P).
  int clique_cover_bound(const VertexSet& P) {
    thread_local std::vector<VertexSet> commons;
    commons.clear();
    for (int v = P.next(0); v >= 0; v = P.next(v + 1)) {
      bool placed = false;
      for (auto& common : commons) {
        if (common.test(v)) {
          common &= g.adjacency_row(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        commons.push_back(g.adjacency_row(v));
        commons.back() &= P;
      }
    }
    return static_cast<int>(commons.size());
  }

  void expand(VertexSet P) {
    if (aborted || bound_met()) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }

    // Degree-0/1 reduction: such vertices always belong to some optimum.
    std::size_t pushed = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = P.next(0); v >= 0; v = P.next(v + 1)) {
        const int d = g.degree_within(v, P);
        if (d == 0) {
          cur.push_back(v);
          ++pushed;
          P.reset(v);
          changed = true;
        } else if (d == 1) {
          cur.push_back(v);
          ++pushed;
          P.reset(v);
          P -= g.adjacency_row(v);
          changed = true;
          break;  // degrees shifted, rescan
        }
      }
    }

    if (P.empty()) {
      record_if_better();
      cur.resize(cur.size() - pushed);
      return;
    }

    const int bound = clique_cover_bound(P);
    if (static_cast<int>(cur.size()) + P.count() <= best ||
        static_cast<int>(cur.size()) + bound <= best) {
      cur.resize(cur.size() - pushed);
      return;
    }

    // Branch on a max-degree vertex (smallest index on ties).
    int pick = -1, pick_deg = -1;
    for (int v = P.next(0); v >= 0; v = P.next(v + 1)) {
      const int d = g.degree_within(v, P);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }

    // include
    VertexSet with = P;
    with.reset(pick);
    with -= g.adjacency_row(pick);
    cur.push_back(pick);
    expand(std::move(with));
    cur.pop_back();

    // exclude
    if (!aborted && !bound_met()) {
      VertexSet without = P;
      without.reset(pick);
      expand(std::move(without));
    }

    cur.resize(cur.size() - pushed);
  }
};

}  // namespace

ISResult max_independent_set(const ExplicitGraph& g, const SolveOptions& opts) {
  Solver solver(g, opts);
  if (!opts.initial_witness.empty()) {
    if (!is_independent(g, opts.initial_witness))
      throw std::invalid_argument("max_independent_set: initial witness not independent");
    solver.best = static_cast<int>(opts.initial_witness.size());
    solver.best_set = opts.initial_witness;
  } else {
    solver.best = 0;
  }
  if (!solver.bound_met()) solver.expand(VertexSet::full(g.vertex_count()));
  ISResult out;
  out.size = solver.best;
  out.witness = solver.best_set;
  out.method = ISMethod::exact;
  out.optimal = !solver.aborted;
  return out;
}

ISResult deletion_lower_bound(const ExplicitGraph& g) {
  const int n = g.vertex_count();
  VertexSet alive = VertexSet::full(n);
  for (auto [u, v] : g.edges()) {
    if (!alive.test(u) || !alive.test(v)) continue;
    // drop the busier endpoint; ties resolve to the larger index
    alive.reset(g.degree(u) > g.degree(v) ? u : v);
  }
  // extend to a maximal independent set
  for (int v = 0; v < n; ++v)
    if (!alive.test(v) && g.degree_within(v, alive) == 0) alive.set(v);
  std::vector<int> witness = alive.to_vector();
  ISResult out;
  out.size = static_cast<int>(witness.size());
  out.witness = std::move(witness);
  out.method = ISMethod::deletion;
  return out;
}

std::pair<ExplicitGraph, std::vector<int>> triangle_free_reduce(const ExplicitGraph& g) {
  const int n = g.vertex_count();
  VertexSet alive = VertexSet::full(n);
  std::vector<int> removed;
  while (true) {
    int found = -1;
    for (int u = alive.next(0); u >= 0 && found < 0; u = alive.next(u + 1)) {
      for (int v = g.adjacency_row(u).next(u + 1); v >= 0 && found < 0;
           v = g.adjacency_row(u).next(v + 1)) {
        if (!alive.test(v)) continue;
        for (int w = g.adjacency_row(v).next(v + 1); w >= 0; w = g.adjacency_row(v).next(w + 1)) {
          if (alive.test(w) && g.has_edge(u, w)) {
            found = u;
            break;
          }
        }
      }
    }
    if (found < 0) break;
    alive.reset(found);
    removed.push_back(found);
  }
  return {g.induced(alive), std::move(removed)};
}

ISResult degree_greedy_is(const ExplicitGraph& g) {
  const int n = g.vertex_count();
  VertexSet alive = VertexSet::full(n);
  std::vector<int> witness;
  while (true) {
    int pick = -1, pick_deg = n + 1;
    for (int v = alive.next(0); v >= 0; v = alive.next(v + 1)) {
      const int d = g.degree_within(v, alive);
      if (d < pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick < 0) break;
    witness.push_back(pick);
    alive.reset(pick);
    alive -= g.adjacency_row(pick);
  }
  ISResult out;
  out.size = static_cast<int>(witness.size());
  out.witness = std::move(witness);
  out.method = ISMethod::greedy;
  return out;
}

long long caro_wei_floor(const ExplicitGraph& g) {
  Rational sum = 0;
  for (int v = 0; v < g.vertex_count(); ++v) sum += Rational(1, g.degree(v) + 1);
  BigInt num = numerator(sum), den = denominator(sum);
  return ((num + den - 1) / den).convert_to<long long>();
}

ShearerBound shearer_bound(double N, double D) {
  if (!(D > 1.0)) throw std::invalid_argument("shearer_bound: D > 1 required");
  const double main = N * (D * std::log(D) - D + 1.0) / ((D - 1.0) * (D - 1.0));
  const double weak = N * (std::log(D) - 1.0) / D;
  return ShearerBound{main, weak};
}

std::pair<int, long long> stability_distance(const std::vector<KSubset>& F, int n) {
  if (F.empty()) throw std::invalid_argument("stability_distance: empty family");
  int best_i = 1;
  long long best_residual = -1;
  for (int i = 1; i <= n; ++i) {
    long long residual = 0;
    for (const auto& s : F)
      if (!s.contains(i)) ++residual;
    if (best_residual < 0 || residual < best_residual) {
      best_residual = residual;
      best_i = i;
    }
  }
  return {best_i, best_residual};
}

}  // namespace ekr
