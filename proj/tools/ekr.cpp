// Command-line front door: parameter inspection, single trials, sweeps,
// and self-verification suites. Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ekr/harness.hpp"
#include "ekr/kneser.hpp"
#include "ekr/regimes.hpp"
#include "ekr/verify.hpp"

namespace {

int cmd_params(int n, int k, double epsilon, double bigC, double margin) {
  ekr::KneserParams kp = ekr::kneser_params(n, k);
  ekr::RegimeThresholds th = ekr::regime_thresholds(n, k, epsilon, bigC);
  std::cout << "n=" << kp.n << " k=" << kp.k << " N=" << kp.N << " D=" << kp.D
            << " lambda_min=" << kp.lambda_min << " edges=" << kp.edge_count << '\n';
  std::cout << "p1=" << th.p1 << " p2=" << th.p2 << " p3=" << th.p3 << " p4=" << th.p4
            << " margin=" << margin << '\n';
  return 0;
}

int cmd_trial(int n, int k, double p, std::uint64_t seed, const ekr::TrialOptions& topts) {
  ekr::TrialRecord r = ekr::run_trial(n, k, p, seed, topts);
  std::cout << ekr::csv_header() << '\n' << ekr::csv_row(r) << '\n';
  return 0;
}

int cmd_sweep(const std::string& config_path, int workers, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config: " << config_path << '\n';
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ekr::SweepConfig cfg = ekr::parse_sweep_config(buf.str());

  std::vector<ekr::SweepSummaryRow> summary;
  if (out_path.empty() || out_path == "-") {
    summary = ekr::run_sweep(cfg, workers, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output: " << out_path << '\n';
      return 2;
    }
    summary = ekr::run_sweep(cfg, workers, out);
  }
  std::cout << ekr::format_summary(summary);
  return 0;
}

int cmd_verify(const std::string& suite) {
  ekr::VerifyReport rep = ekr::verify_suite(suite);
  for (const std::string& line : rep.lines) std::cout << line << '\n';
  std::cout << (rep.ok ? "PASS" : "FAIL") << " suite " << suite << '\n';
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersecting families in random k-uniform hypergraphs"};
  app.require_subcommand(1);

  int n = 0, k = 0, workers = 1;
  double p = 0.0, margin = 10.0, epsilon = 0.1, bigC = 8.0;
  std::uint64_t seed = 0;
  long long budget = 200'000'000;
  std::string config_path, out_path, suite;

  auto* sp_params = app.add_subcommand("params", "exact Kneser parameters and regime thresholds");
  sp_params->add_option("--n", n)->required();
  sp_params->add_option("--k", k)->required();
  sp_params->add_option("--epsilon", epsilon);
  sp_params->add_option("--bigC", bigC);
  sp_params->add_option("--margin", margin);

  auto* sp_trial = app.add_subcommand("trial", "one seeded Monte Carlo trial, CSV row on stdout");
  sp_trial->add_option("--n", n)->required();
  sp_trial->add_option("--k", k)->required();
  sp_trial->add_option("--p", p)->required();
  sp_trial->add_option("--seed", seed)->required();
  sp_trial->add_option("--budget", budget);
  sp_trial->add_option("--margin", margin);
  sp_trial->add_option("--epsilon", epsilon);
  sp_trial->add_option("--bigC", bigC);

  auto* sp_sweep = app.add_subcommand("sweep", "trial grid from a JSON config; CSV + summary");
  sp_sweep->add_option("--config", config_path)->required();
  sp_sweep->add_option("--workers", workers);
  sp_sweep->add_option("--out", out_path);

  auto* sp_verify = app.add_subcommand("verify", "run a self-check suite");
  sp_verify->add_option("suite", suite, "one of: ekr, hoffman, supersat, containers, chernoff")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sp_params->parsed()) return cmd_params(n, k, epsilon, bigC, margin);
    if (sp_trial->parsed()) {
      ekr::TrialOptions topts;
      topts.solver_budget = budget;
      topts.margin = margin;
      topts.epsilon = epsilon;
      topts.C = bigC;
      return cmd_trial(n, k, p, seed, topts);
    }
    if (sp_sweep->parsed()) return cmd_sweep(config_path, workers, out_path);
    if (sp_verify->parsed()) return cmd_verify(suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
