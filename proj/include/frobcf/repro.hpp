#pragma once

// The acceptance claims as runnable checks, shared by the acceptance test
// binary and `frobcf repro`.

#include "frobcf/classify.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace frobcf {

struct ClaimResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool undecided = false;  // failure caused by an Undecided/Unresolved residue
  std::string detail;      // deterministic summary of what was observed
  double seconds = 0;
};

struct ReproConfig {
  int workers = 1;
  DecisionConfig decision;        // Frobenius decision caps
  long conjugator_cap = 4;        // classification
  long modulus_cap = 100;
  std::uint64_t seed = 20240501;  // random samples only
  int conjugations = 20;          // per representative, claim 7
  int statement_samples = 200;    // claim 5
  std::vector<int> determinism_workers{1, 4, 8};
  bool check_determinism = true;  // claim 8
};

/// Random product of elementary matrices with entries bounded by `spread`.
IntMatrix random_unimodular(std::mt19937_64& rng, int steps = 8, long spread = 3);

ClaimResult claim_census(const ReproConfig& config);
ClaimResult claim_classification(const ReproConfig& config);
ClaimResult claim_frobenius_sweep(const ReproConfig& config);
ClaimResult claim_counterexample(const ReproConfig& config);
ClaimResult claim_statement(const ReproConfig& config);
ClaimResult claim_quadratic_oracle(const ReproConfig& config);
ClaimResult claim_sail(const ReproConfig& config);

/// Claims 1 to 7 with config.workers, then claim 8 (rerunning 1 to 7 for each
/// worker count in determinism_workers and comparing the untimed reports).
std::vector<ClaimResult> repro_all(const ReproConfig& config);

/// One line per claim: "[PASS] 1 title: detail (1.23 s)".
std::string format_report(const std::vector<ClaimResult>& results, bool timings = true);

/// 0 when every claim passes, 3 when a failure involves an undecided residue,
/// 4 otherwise.
int repro_exit_code(const std::vector<ClaimResult>& results);

}  // namespace frobcf
