#pragma once

// Named verification suites shared by the CLI and the acceptance tests:
//   theorems   — classification versus brute-force search on the full corpus
//   lemmas     — walk/polynomial transfer identity, automorphism
//                intertwining, transport of detected transfers
//   cyclotomic — exponent decomposition round trips, basis ranks, ring laws,
//                exponent-halving identities, integrality versus the
//                transfer family
// Reports are byte-deterministic for a fixed configuration and seed.

#include <cstdint>
#include <string>

namespace pstwalk {

struct VerifyConfig {
  std::string suite = "all";  // theorems | lemmas | cyclotomic | all
  int n_max = 12;
  int tau_factor = 4;
  std::uint64_t seed = 7;
  int jobs = 1;
};

struct VerifyOutcome {
  std::string jsonl;  // one record per check
  std::string csv;    // per-suite summary
  int checks = 0;
  int failures = 0;
};

VerifyOutcome run_verify(const VerifyConfig& config);

}  // namespace pstwalk
