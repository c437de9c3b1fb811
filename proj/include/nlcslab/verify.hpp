#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlcslab/stabilizer.hpp"

namespace nlcs {

struct CheckResult {
  std::string name;      // which paper statement the check guards
  double observed = 0;
  double bound = 0;      // expected value or bound being compared against
  double tolerance = 0;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t dense_cutoff = kDefaultDenseCutoff;
  std::size_t enum_cutoff = kDefaultEnumCutoff;
  /// Trial counts scale down for quick runs; defaults match the reports
  /// quoted in the acceptance suite.
  std::size_t mc_trials = 10000;
  std::size_t sample_trials = 400;
};

/// The full lemma suite: Claim 2.1, Claim 3.2, Fact 3.3, Lemmas 3.3-3.5,
/// Theorem 3.1 spot checks, Lemmas 4.1-4.2, Corollary 4.3, the Claim 4.4
/// pipeline, and Lemmas B.2, B.6, B.7, B.8. Pass/fail verdicts are
/// seed-robust; only the sampled observables vary.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt);

}  // namespace nlcs
