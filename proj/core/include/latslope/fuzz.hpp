#pragma once

#include <cstdint>

#include "latslope/io.hpp"

namespace latslope {

struct FuzzConfig {
  std::uint64_t seed = 1;
  unsigned trials = 100;
  std::size_t min_rank = 2;
  std::size_t max_rank = 5;
  long entry_bound = 3;
};

struct FuzzFailure {
  unsigned trial;
  std::string reproducer_json;
};

struct FuzzOutcome {
  std::string campaign;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  unsigned failures = 0;
  std::vector<FuzzFailure> failure_details;

  bool ok() const { return failures == 0; }
};

std::string fuzz_summary_csv(const FuzzOutcome& o);

// mu(S1 / S1 cap S2) >= mu(S1 + S2 / S2) on random triples.
FuzzOutcome parallelogram_campaign(const FuzzConfig& cfg);

// mu_min(S) >= mu_min(L) >= min(mu_min(S), mu_min(L/S)) on random pairs.
FuzzOutcome lemma_x_campaign(const FuzzConfig& cfg);

// Brute-force mu_min(L (x) M) = mu_min(L) mu_min(M) for rank products <= 9.
FuzzOutcome bost_chen_campaign(const FuzzConfig& cfg);

// Exact algebraic identity suite: det multiplicativity along quotients,
// tensor and dual slope identities, index = Gram determinant ratio.
FuzzOutcome identities_campaign(const FuzzConfig& cfg);

// lambda(L (x) M)^2 <= lambda(L)^2 lambda(M)^2 on random pairs.
FuzzOutcome first_minimum_tensor_campaign(const FuzzConfig& cfg);

}  // namespace latslope
