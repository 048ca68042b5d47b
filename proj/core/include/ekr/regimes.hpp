#pragma once

#include <string>

namespace ekr {

// The four probability windows (plus the unlabelled range between them).
enum class Regime { sub_D, flat_lower, flat_upper, principal, gap };

const char* regime_name(Regime r);
Regime regime_from_name(const std::string& name);

struct RegimeThresholds {
  double p1;  // 1/D
  double p2;  // (n/k)/D
  double p3;  // (n/k)^(1-epsilon)/D
  double p4;  // C*(n/k)*ln^2(n/k)/D
};
RegimeThresholds regime_thresholds(int n, int k, double epsilon, double C);

struct RegimePrediction {
  Regime regime = Regime::gap;
  double predicted_size = 0;
  double lower = 0;
  double upper = 0;
  double epsilon = 0;
  double C = 0;
};

// Finite-n rendering of the asymptotic conditions: a multiplicative margin m
// decides "<<" / ">>" around 1/D (p <= p1/m vs p >= m*p1); the in-between
// maps to gap, as does the window above the flat range up to p4.
RegimePrediction classify_and_predict(int n, int k, double p, double epsilon, double C,
                                      double margin = 10.0);

struct TransferenceBounds {
  double case_ii_size_threshold;  // 4N/(eps*gamma*D) * ln(pD)
  double case_ii_prob;            // exp(-(N/(gamma*D)) * ln(pD))
  double case_iii_size_threshold; // (1+eps)*lambda*p*N
  double case_iii_prob;           // exp(-eps^2*p*lambda*N/24)
  double case_iv_prob;            // exp(-delta^2*lambda*p*N/2)
  bool case_ii_applicable;
  bool case_iii_applicable;
  bool case_iv_applicable;
};

TransferenceBounds transference_bounds(double N, double D, double p, double lambda, double gamma,
                                       double epsilon, double delta);

}  // namespace ekr
