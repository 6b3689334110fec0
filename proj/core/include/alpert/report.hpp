#ifndef ALPERT_REPORT_HPP
#define ALPERT_REPORT_HPP

#include <set>
#include <string>

namespace alpert {

/// Scopes: orthogonality, oracle, recurrences, wavelets, fourier.
struct VerifyOptions {
  int order = 3;
  std::set<std::string> scopes;  // empty = all
  int fourier_max_order = 6;     // numeric identities stop here
  int threads = 1;
};

struct VerifyResult {
  bool pass = false;
  std::string report_json;
};

const std::set<std::string>& all_verify_scopes();

/// Runs the selected suites cumulatively over orders 0..order and renders a
/// deterministic JSON report, including the discrepancy ledger (the
/// oracle-resolved sub-subdiagonal radicand and the validated range of the
/// Bessel difference equation).
VerifyResult run_verification(const VerifyOptions& options);

}  // namespace alpert

#endif  // ALPERT_REPORT_HPP
