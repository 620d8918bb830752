#pragma once
#include <vector>

#include "plbandits/oracle.hpp"
#include "plbandits/types.hpp"

namespace plb {

inline constexpr long long kDefaultScorePlayCap = 10'000'000;

// Split A into ceil(|A|/k) batches in ascending item-id order; all batches
// have size k except a possibly short trailing remainder.
BatchPlan partition(const std::vector<int>& A, int k);

// Plays S u {pivot} until the pivot wins d = ceil(10 ln(4/delta)) times and
// returns Z/d with Z = total plays - d, an estimate of Theta_S / theta_pivot.
ScoreEstimate score_estimate(PlayOracle& oracle, const std::vector<int>& S,
                             int pivot, double delta,
                             long long play_cap = kDefaultScorePlayCap);

// max(2 raw + 1, 2); the wrapper's inflation of the raw score ratio.
double clamp_theta_hat(double raw);

}  // namespace plb
