#ifndef SGA_VERIFIER_HPP
#define SGA_VERIFIER_HPP

// Per-instance machine verification.  Every equivalence is tested by
// computing each side from first principles through the other modules and
// asserting agreement; a failure is a bug, never an expected outcome.
// Checks whose ideal enumeration would exceed the dimension cap degrade to
// "skipped", never to a silent pass.

#include "sga/report.hpp"
#include "sga/partial_action.hpp"
#include "sga/ultragraph.hpp"

namespace sga {

struct SuiteSelection {
  bool dynamics = false;
  bool ideal = false;
  bool steinberg = false;
  bool stone = false;

  static SuiteSelection all() { return {true, true, true, true}; }
  static SuiteSelection parse(const std::string& name);  // throws on unknown name
};

struct VerifierOptions {
  int dim_cap = 0;             // 0 = use effective_dim_cap(p)
  int sampled_pairs = 200;     // random element pairs for the bimodule identities
  int sampled_triples = 100;   // random triples for convolution associativity
  int sampled_ideal_triples = 20;
};

struct VerificationReport {
  std::string fingerprint;
  std::vector<CheckResult> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::fail;
    return n;
  }
  int skipped() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::skipped;
    return n;
  }
};

VerificationReport run_action_suites(const PartialAction& a, int p, SuiteSelection suites,
                                     const VerifierOptions& opts = {});

VerificationReport run_ultragraph_suite(const Ultragraph& u, int max_len);

} // namespace sga

#endif
