#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ekr/regimes.hpp"

namespace ekr {

// One Monte Carlo trial of the largest-intersecting-family experiment.
struct TrialRecord {
  int n = 0, k = 0;
  double p = 0;
  std::uint64_t seed = 0;
  long long sampled_vertices = 0;
  long long sampled_edges = 0;
  long long triangle_count = 0;
  long long alpha_exact = 0;  // best found; exact when alpha_optimal
  bool alpha_optimal = false;
  long long alpha_greedy = 0;
  long long alpha_deletion = 0;
  long long star_best = 0;  // max_i |F_i ∩ V_p|
  int stability_index = 0;
  long long stability_residual = 0;
  Regime regime = Regime::gap;
  double predicted = 0;
  long long runtime_ms = 0;
};

struct TrialOptions {
  long long solver_budget = 200'000'000;
  double margin = 10.0;
  double epsilon = 0.1;
  double C = 8.0;
  bool measure_runtime = true;  // sweeps zero this for byte-stable CSV
};

TrialRecord run_trial(int n, int k, double p, std::uint64_t seed, const TrialOptions& opts = {});

// CSV columns are the TrialRecord fields in order plus a format version.
extern const char* const kCsvFormatVersion;
std::string csv_header();
std::string csv_row(const TrialRecord& r);  // validates the record invariants

struct SweepConfig {
  int n = 0, k = 0;
  std::vector<double> p_grid;
  int trials_per_p = 1;
  std::uint64_t master_seed = 0;
  long long solver_budget = 200'000'000;
  double margin = 10.0;
  double epsilon = 0.1;
  double C = 8.0;
};

// Parses the JSON sweep config; unknown fields are rejected. p_grid is a
// list of probabilities or {"p_min":..,"p_max":..,"points":..} (geometric).
SweepConfig parse_sweep_config(const std::string& json_text);

struct SweepSummaryRow {
  double p;
  int trials;
  double mean_alpha, stddev_alpha;
  double mean_star, mean_predicted, ratio_alpha_to_predicted;
  int non_optimal;
};

// Runs trials_per_p x |p_grid| trials across `workers` threads. Row order
// and content are independent of the worker count: each trial's seed is
// derive_seed(master_seed, p_index, trial_index) and rows land in
// preallocated slots sorted by (p, trial index).
std::vector<SweepSummaryRow> run_sweep(const SweepConfig& config, int workers, std::ostream& csv_out);

std::string format_summary(const std::vector<SweepSummaryRow>& rows);

}  // namespace ekr
