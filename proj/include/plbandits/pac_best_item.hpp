#pragma once
#include <optional>
#include <vector>

#include "plbandits/oracle.hpp"
#include "plbandits/subroutines.hpp"
#include "plbandits/types.hpp"

namespace plb {

struct PacBestItemConfig {
  int k = 5;
  int m = 1;
  double eps = 0.01;
  double delta = 0.01;
  std::optional<int> pivot;  // (1/2,delta)-optimal pivot; bootstrapped if unset
  // Final-phase overrides applied once the survivor set fits in one padded
  // group: eps_l <- final_eps_num/final_eps_den * eps, delta_l <- delta.
  double final_eps_num = 2.0;
  double final_eps_den = 3.0;
  // When false, score estimation is skipped and the worst-case mass k is
  // used per group (the instance-independent bootstrap mode).
  bool use_score_estimate = true;
  long long score_play_cap = kDefaultScorePlayCap;
};

struct SubroutineReport {
  int returned_item = -1;
  long long total_plays = 0;  // including score-estimate and bootstrap plays
  struct Phase {
    int surviving = 0;   // |S| entering the phase
    int groups = 0;      // full groups played
    std::vector<long long> t_per_group;
  };
  std::vector<Phase> phases;
};

// The adaptive (eps,delta)-PAC best-item subroutine: sequential elimination
// over k-sized groups with instance-dependent per-group play counts
// t = ceil(16 Theta_hat / (m eps_l^2) ln(2k/delta_l)).
// universe supplies the padding pool for short survivor sets.
SubroutineReport pac_best_item(PlayOracle& oracle, const std::vector<int>& A,
                               const std::vector<int>& universe,
                               const PacBestItemConfig& cfg);

// A (1/2,delta)-optimal pivot: pac_best_item with eps = 1/2 and the
// worst-case group mass k in place of score estimation.
int bootstrap_pivot(PlayOracle& oracle, const std::vector<int>& A,
                    const std::vector<int>& universe, int k, int m,
                    double delta);

}  // namespace plb
