#include "ekr/harness.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ekr/combinatorics.hpp"
#include "ekr/indep.hpp"
#include "ekr/kneser.hpp"
#include "ekr/random.hpp"

namespace ekr {

const char* const kCsvFormatVersion = "1";

namespace {

// Shortest round-trippable decimal form; stable across runs on one build.
std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

TrialRecord run_trial(int n, int k, double p, std::uint64_t seed, const TrialOptions& opts) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  auto t0 = std::chrono::steady_clock::now();

  KneserParams kp = kneser_params(n, k);
  std::uint64_t N = binomial_u64(n, k);

  TrialRecord r;
  r.n = n;
  r.k = k;
  r.p = p;
  r.seed = seed;

  std::vector<std::uint64_t> ranks;
  if (p > 0) ranks = sample_ranks(N, p, seed);
  r.sampled_vertices = static_cast<long long>(ranks.size());

  ExplicitGraph g = induced_subgraph(ranks, n, k);
  r.sampled_edges = static_cast<long long>(g.edge_count());
  r.triangle_count = static_cast<long long>(g.triangle_count());

  // Best surviving star F_i ∩ V_p, tracked per ground element i in [1..n].
  std::vector<long long> star_hits(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t v = 0; v < ranks.size(); ++v) {
    KSubset s = colex_unrank(ranks[v], n, k);
    for (int e : s.elements()) ++star_hits[static_cast<std::size_t>(e)];
  }
  int best_star = 1;
  for (int i = 2; i <= n; ++i)
    if (star_hits[static_cast<std::size_t>(i)] > star_hits[static_cast<std::size_t>(best_star)]) best_star = i;
  r.star_best = star_hits[static_cast<std::size_t>(best_star)];
  std::vector<int> star_witness;
  for (std::size_t v = 0; v < ranks.size(); ++v) {
    KSubset s = colex_unrank(ranks[v], n, k);
    if (s.contains(best_star)) star_witness.push_back(static_cast<int>(v));
  }

  ISResult greedy = degree_greedy_is(g);
  r.alpha_greedy = static_cast<long long>(greedy.size);
  ISResult del = deletion_lower_bound(g);
  r.alpha_deletion = static_cast<long long>(del.size);

  SolveOptions so;
  so.node_budget = opts.solver_budget;
  so.initial_witness = star_witness;
  if (greedy.size > so.initial_witness.size()) so.initial_witness = greedy.witness;
  if (del.size > so.initial_witness.size()) so.initial_witness = del.witness;
  if (ranks.size() == N) {
    // Full vertex set: the spectral ratio bound (k/n)N is exact and certifies
    // the star incumbent immediately.
    so.upper_bound_hint = static_cast<long long>(binomial_u64(n - 1, k - 1));
  }
  ISResult exact = max_independent_set(g, so);
  r.alpha_exact = static_cast<long long>(exact.size);
  r.alpha_optimal = exact.optimal;

  const std::vector<int>& wit = exact.witness;
  std::vector<KSubset> family;
  family.reserve(wit.size());
  for (int v : wit) family.push_back(colex_unrank(g.kneser_ranks()[static_cast<std::size_t>(v)], n, k));
  if (family.empty()) {
    r.stability_index = 0;
    r.stability_residual = 0;
  } else {
    auto [sidx, sres] = stability_distance(family, n);
    r.stability_index = sidx;
    r.stability_residual = static_cast<long long>(sres);
  }

  RegimePrediction rep = classify_and_predict(n, k, p, opts.epsilon, opts.C, opts.margin);
  r.regime = rep.regime;
  r.predicted = rep.predicted_size;

  if (opts.measure_runtime) {
    auto t1 = std::chrono::steady_clock::now();
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  }
  (void)kp;
  return r;
}

std::string csv_header() {
  return "n,k,p,seed,sampled_vertices,sampled_edges,triangle_count,"
         "alpha_exact,alpha_optimal,alpha_greedy,alpha_deletion,star_best,"
         "stability_index,stability_residual,regime,predicted,runtime_ms,format_version";
}

std::string csv_row(const TrialRecord& r) {
  if (r.alpha_exact < r.alpha_greedy || r.alpha_exact < r.alpha_deletion || r.alpha_exact < r.star_best)
    throw std::logic_error("trial record violates alpha_exact >= lower bounds");
  if (r.sampled_edges == 0 && r.alpha_exact != r.sampled_vertices)
    throw std::logic_error("edgeless sample must have alpha == sampled_vertices");
  std::ostringstream os;
  os << r.n << ',' << r.k << ',' << fmt_double(r.p) << ',' << r.seed << ','
     << r.sampled_vertices << ',' << r.sampled_edges << ',' << r.triangle_count << ','
     << r.alpha_exact << ',' << (r.alpha_optimal ? 1 : 0) << ',' << r.alpha_greedy << ','
     << r.alpha_deletion << ',' << r.star_best << ',' << r.stability_index << ','
     << r.stability_residual << ',' << regime_name(r.regime) << ',' << fmt_double(r.predicted)
     << ',' << r.runtime_ms << ',' << kCsvFormatVersion;
  return os.str();
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object()) throw std::invalid_argument("sweep config must be a JSON object");
  static const char* const known[] = {"n", "k", "p_grid", "trials_per_p", "master_seed",
                                      "solver_budget", "margin", "epsilon", "C"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* f : known) ok = ok || it.key() == f;
    if (!ok) throw std::invalid_argument("unknown sweep config field: " + it.key());
  }
  SweepConfig c;
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  const auto& pg = j.at("p_grid");
  if (pg.is_array()) {
    c.p_grid = pg.get<std::vector<double>>();
  } else if (pg.is_object()) {
    for (auto it = pg.begin(); it != pg.end(); ++it)
      if (it.key() != "p_min" && it.key() != "p_max" && it.key() != "points")
        throw std::invalid_argument("unknown p_grid field: " + it.key());
    double lo = pg.at("p_min").get<double>(), hi = pg.at("p_max").get<double>();
    int pts = pg.at("points").get<int>();
    if (!(lo > 0 && hi >= lo && pts >= 1)) throw std::invalid_argument("bad p_grid range");
    for (int i = 0; i < pts; ++i) {
      double t = pts == 1 ? 0.0 : static_cast<double>(i) / (pts - 1);
      c.p_grid.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
    }
  } else {
    throw std::invalid_argument("p_grid must be an array or a range object");
  }
  if (c.p_grid.empty()) throw std::invalid_argument("p_grid is empty");
  for (double p : c.p_grid)
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p_grid entries must lie in [0,1]");
  c.trials_per_p = j.at("trials_per_p").get<int>();
  if (c.trials_per_p < 1) throw std::invalid_argument("trials_per_p must be positive");
  c.master_seed = j.at("master_seed").get<std::uint64_t>();
  if (j.contains("solver_budget")) c.solver_budget = j.at("solver_budget").get<long long>();
  if (j.contains("margin")) c.margin = j.at("margin").get<double>();
  if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
  if (j.contains("C")) c.C = j.at("C").get<double>();
  kneser_params(c.n, c.k);  // validate up front
  return c;
}

std::vector<SweepSummaryRow> run_sweep(const SweepConfig& config, int workers, std::ostream& csv_out) {
  if (workers < 1) throw std::invalid_argument("workers must be positive");
  const std::size_t np = config.p_grid.size();
  const std::size_t total = np * static_cast<std::size_t>(config.trials_per_p);
  std::vector<TrialRecord> slots(total);

  TrialOptions topts;
  topts.solver_budget = config.solver_budget;
  topts.margin = config.margin;
  topts.epsilon = config.epsilon;
  topts.C = config.C;
  topts.measure_runtime = false;  // keep rerun output byte-identical

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      std::size_t pi = idx / static_cast<std::size_t>(config.trials_per_p);
      std::size_t ti = idx % static_cast<std::size_t>(config.trials_per_p);
      std::uint64_t seed = derive_seed(config.master_seed, static_cast<std::uint64_t>(pi),
                                       static_cast<std::uint64_t>(ti));
      slots[idx] = run_trial(config.n, config.k, config.p_grid[pi], seed, topts);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  csv_out << csv_header() << '\n';
  for (const TrialRecord& r : slots) csv_out << csv_row(r) << '\n';

  std::vector<SweepSummaryRow> rows;
  for (std::size_t pi = 0; pi < np; ++pi) {
    SweepSummaryRow row{};
    row.p = config.p_grid[pi];
    row.trials = config.trials_per_p;
    double sa = 0, sa2 = 0, ss = 0, sp = 0;
    int nonopt = 0;
    for (int ti = 0; ti < config.trials_per_p; ++ti) {
      const TrialRecord& r = slots[pi * static_cast<std::size_t>(config.trials_per_p) +
                                   static_cast<std::size_t>(ti)];
      double a = static_cast<double>(r.alpha_exact);
      sa += a;
      sa2 += a * a;
      ss += static_cast<double>(r.star_best);
      sp += r.predicted;
      if (!r.alpha_optimal) ++nonopt;
    }
    double m = sa / row.trials;
    row.mean_alpha = m;
    row.stddev_alpha = row.trials > 1 ? std::sqrt(std::max(0.0, (sa2 - sa * m) / (row.trials - 1))) : 0.0;
    row.mean_star = ss / row.trials;
    row.mean_predicted = sp / row.trials;
    row.ratio_alpha_to_predicted = row.mean_predicted > 0 ? m / row.mean_predicted : 0.0;
    row.non_optimal = nonopt;
    rows.push_back(row);
  }
  return rows;
}

std::string format_summary(const std::vector<SweepSummaryRow>& rows) {
  std::ostringstream os;
  os << "p trials mean_alpha stddev_alpha mean_star mean_predicted ratio non_optimal\n";
  for (const auto& r : rows)
    os << fmt_double(r.p) << ' ' << r.trials << ' ' << fmt_double(r.mean_alpha) << ' '
       << fmt_double(r.stddev_alpha) << ' ' << fmt_double(r.mean_star) << ' '
       << fmt_double(r.mean_predicted) << ' ' << fmt_double(r.ratio_alpha_to_predicted) << ' '
       << r.non_optimal << '\n';
  return os.str();
}

}  // namespace ekr
