#pragma once

#include <string>
#include <vector>

namespace ekr {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;

  void check(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    ok = ok && cond;
  }
  void note(const std::string& what) { lines.push_back("     " + what); }
};

// Self-check suites runnable from the CLI. Each returns a line-per-check
// report; `ok` is the conjunction.
VerifyReport verify_suite_ekr();         // alpha(K(n,k)) = C(n-1,k-1), star optimal
VerifyReport verify_suite_hoffman();     // spectral bound on small instances
VerifyReport verify_suite_supersat();    // supersaturation certificates + refutation
VerifyReport verify_suite_containers(); // fingerprint/container invariants on a corpus
VerifyReport verify_suite_chernoff();    // closed-form tail/counting bounds

VerifyReport verify_suite(const std::string& name);  // dispatch; throws on unknown name
std::vector<std::string> verify_suite_names();

}  // namespace ekr
