#pragma once
#include <cstdint>

#include "plbandits/pac_wrapper.hpp"
#include "plbandits/pl_instance.hpp"

namespace plb {

struct BudgetConfig {
  long long Q = 0;  // total subset-play budget
  int k = 5;
  int m = 1;
  std::uint64_t seed = 0;
};

// Smallest Q for which the per-set allocation Q' is at least 1:
// ceil((2n + k log2 k) / k).
long long min_feasible_budget(int n, int k);

// Fixed-budget best-item identification: rounds of k-sized batches each
// played Q' = floor(kQ / (2n + k log2 k)) times, median-rule halving on
// Copeland-style win scores, with a padded endgame below k survivors.
// Total plays never exceed Q.
RunReport uniform_allocation(const PLInstance& inst, const BudgetConfig& cfg);

}  // namespace plb
