#include "plbandits/subroutines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plb {

BatchPlan partition(const std::vector<int>& A, int k) {
  if (k < 1) throw std::invalid_argument("batch size must be >= 1");
  if (A.empty()) throw std::invalid_argument("empty input set");
  std::vector<int> sorted = A;
  std::sort(sorted.begin(), sorted.end());
  BatchPlan plan;
  size_t pos = 0;
  while (sorted.size() - pos >= (size_t)k) {
    plan.batches.emplace_back(sorted.begin() + pos, sorted.begin() + pos + k);
    pos += k;
  }
  plan.remainder.assign(sorted.begin() + pos, sorted.end());
  return plan;
}

ScoreEstimate score_estimate(PlayOracle& oracle, const std::vector<int>& S,
                             int pivot, double delta, long long play_cap) {
  if (S.empty()) throw std::invalid_argument("empty subset");
  if (std::find(S.begin(), S.end(), pivot) != S.end())
    throw std::invalid_argument("pivot must not be in S");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must be in (0,1)");
  long long d = (long long)std::ceil(10.0 * std::log(4.0 / delta));
  long long total = oracle.plays_until_pivot_wins(S, pivot, d, play_cap);
  ScoreEstimate est;
  est.wins_of_pivot = d;
  est.plays_used = total;
  est.ratio = (double)(total - d) / (double)d;
  return est;
}

double clamp_theta_hat(double raw) {
  if (raw < 0.0) throw std::invalid_argument("negative score ratio");
  return std::max(2.0 * raw + 1.0, 2.0);
}

}  // namespace plb
