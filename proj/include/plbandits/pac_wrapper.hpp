#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "plbandits/pac_best_item.hpp"
#include "plbandits/pl_instance.hpp"
#include "plbandits/types.hpp"

namespace plb {

struct WrapperConfig {
  int k = 5;
  int m = 1;
  double eps = 0.0;    // eps = 0: exact best-item identification
  double delta = 0.01;
  // delta_s = delta / (numerator * s^3); 80 is a known tighter endgame choice.
  double delta_numer_main = 120.0;
  double delta_numer_endgame = 120.0;
  std::uint64_t seed = 0;
  long long play_budget = -1;  // < 0: unlimited
  long long score_play_cap = kDefaultScorePlayCap;
};

struct WrapperTrace {
  struct Phase {
    int s = 0;
    bool endgame = false;
    double eps_s = 0.0;
    double delta_s = 0.0;
    int pivot = -1;
    std::vector<int> surviving_before;       // A_{s-1}
    std::vector<double> theta_hat;           // clamped, per batch
    std::vector<long long> t_s;              // per batch
    std::vector<int> eliminated;
    long long subroutine_plays = 0;
  };
  std::vector<Phase> phases;

  std::string to_csv() const;  // one row per phase
};

struct RunReport {
  int returned_item = -1;
  long long total_plays = 0;
  std::vector<long long> item_plays;  // subset plays each item took part in
  WrapperTrace trace;
  bool completed = false;
};

class WrapperBudgetError : public BudgetExhausted {
 public:
  WrapperBudgetError(const std::string& msg, RunReport partial)
      : BudgetExhausted(msg), partial_report(std::move(partial)) {}
  RunReport partial_report;
};

// The phase-based wrapper: per phase, find a reference item with the PAC
// subroutine, benchmark every survivor against it in k-sized batches played
// t_s = ceil(2 Theta_hat / (m eps_s^2) ln(k/delta_s)) times, and eliminate
// items losing by more than eps_s. With eps > 0 the run stops early at the
// first phase where eps_s <= eps and returns that phase's reference item.
RunReport pac_wrapper(const PLInstance& inst, const WrapperConfig& cfg);

// Per-item count of subset plays the item participated in.
std::vector<long long> survival_profile(const RunReport& report);

std::string run_report_csv(const RunReport& report);

}  // namespace plb
