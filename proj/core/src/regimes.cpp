#include "ekr/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ekr/combinatorics.hpp"

namespace ekr {
namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double exp_clamped(double exponent) {
  // exponents like -delta^2*lambda*p*N underflow; clamp into [0,1]
  if (exponent >= 0) return 1.0;
  if (exponent < -700.0) return 0.0;
  return clamp01(std::exp(exponent));
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::sub_D: return "sub_D";
    case Regime::flat_lower: return "flat_lower";
    case Regime::flat_upper: return "flat_upper";
    case Regime::principal: return "principal";
    case Regime::gap: return "gap";
  }
  return "?";
}

Regime regime_from_name(const std::string& name) {
  for (Regime r : {Regime::sub_D, Regime::flat_lower, Regime::flat_upper, Regime::principal,
                   Regime::gap})
    if (name == regime_name(r)) return r;
  throw std::invalid_argument("unknown regime tag: " + name);
}

RegimeThresholds regime_thresholds(int n, int k, double epsilon, double C) {
  const double D = static_cast<double>(binomial_u64(n - k, k));
  const double ratio = static_cast<double>(n) / k;
  const double lnr = std::log(ratio);
  return RegimeThresholds{1.0 / D, ratio / D, std::pow(ratio, 1.0 - epsilon) / D,
                          C * ratio * lnr * lnr / D};
}

RegimePrediction classify_and_predict(int n, int k, double p, double epsilon, double C,
                                      double margin) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("classify_and_predict: p in (0,1]");
  const double N = static_cast<double>(binomial_u64(n, k));
  const double D = static_cast<double>(binomial_u64(n - k, k));
  const double star = static_cast<double>(k) / n * N;  // (k/n)N, the EKR size
  const RegimeThresholds th = regime_thresholds(n, k, epsilon, C);
  const double lnpd = p * D > 1.0 ? std::log(p * D) : 0.0;
  const double flat = N / D * lnpd;
  const double lnr = std::log(static_cast<double>(n) / k);

  RegimePrediction out;
  out.epsilon = epsilon;
  out.C = C;

  // One monotone curve covers all windows: pN while the sample is nearly
  // edgeless, then the larger of the flat estimate and the star estimate.
  if (p * D <= 1.0)
    out.predicted_size = p * N;
  else
    out.predicted_size = std::min(p * N, std::max(N / D * (1.0 + lnpd), p * star));

  if (p >= th.p4) {
    out.regime = Regime::principal;
    out.lower = (1 - epsilon) * p * star;
    out.upper = (1 + epsilon) * p * star;
    out.predicted_size = p * star;
  } else if (p <= th.p1 / margin) {
    out.regime = Regime::sub_D;
    out.lower = (1 - epsilon) * p * N;
    out.upper = (1 + epsilon) * p * N;
    out.predicted_size = p * N;
  } else if (p >= margin * th.p1 && p <= th.p3) {
    out.regime = Regime::flat_upper;
    out.lower = (1 - epsilon) * flat;
    out.upper = C * flat;
  } else if (p >= margin * th.p1 && p <= th.p2) {
    out.regime = Regime::flat_lower;
    out.lower = (1 - epsilon) * flat;
    out.upper = C * flat;
  } else {
    out.regime = Regime::gap;
    out.lower = 0.0;
    out.upper = C * N / D * lnr * lnr;  // the O((N/D) ln^2(n/k)) remark
  }
  if (out.upper < out.predicted_size) out.upper = out.predicted_size;
  if (out.lower > out.predicted_size) out.lower = out.predicted_size;
  return out;
}

TransferenceBounds transference_bounds(double N, double D, double p, double lambda, double gamma,
                                       double epsilon, double delta) {
  TransferenceBounds out{};
  const double pD = p * D;
  const double ln_el = std::log(std::exp(1.0) / lambda);

  out.case_ii_applicable = pD > 1.0 && p >= 9.0 / D &&
                           p <= std::pow(lambda, epsilon) / (lambda * gamma * D);
  if (pD > 1.0) {
    const double lnpd = std::log(pD);
    out.case_ii_size_threshold = 4.0 * N / (epsilon * gamma * D) * lnpd;
    out.case_ii_prob = exp_clamped(-(N / (gamma * D)) * lnpd);
  } else {
    out.case_ii_size_threshold = 0.0;
    out.case_ii_prob = 1.0;
  }

  out.case_iii_applicable = p >= ln_el * ln_el / (lambda * gamma * D);
  out.case_iii_size_threshold = (1.0 + epsilon) * lambda * p * N;
  out.case_iii_prob = exp_clamped(-epsilon * epsilon * p * lambda * N / 24.0);

  out.case_iv_applicable = p >= ln_el * ln_el / (lambda * D);
  out.case_iv_prob = exp_clamped(-delta * delta * lambda * p * N / 2.0);
  return out;
}

}  // namespace ekr
