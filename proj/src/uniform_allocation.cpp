#include "plbandits/uniform_allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "plbandits/oracle.hpp"
#include "plbandits/subroutines.hpp"

namespace plb {

namespace {

double set_count_bound(int n, int k) {
  return (2.0 * n + k * std::log2((double)k)) / k;
}

// Survivors of one batch under the median rule: keep w_i >= lower-median,
// trimming ties at the median (larger sum of phat, then lower id first)
// so that at most ceil(|batch|/2) remain.
std::vector<int> halve(const std::vector<int>& members,
                       const std::vector<long long>& score,
                       const std::vector<double>& tiebreak) {
  size_t c = members.size();
  std::vector<long long> sorted_scores = score;
  std::sort(sorted_scores.begin(), sorted_scores.end());
  long long median = sorted_scores[(c - 1) / 2];  // lower median

  std::vector<size_t> order(c);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (score[a] != score[b]) return score[a] > score[b];
    if (tiebreak[a] != tiebreak[b]) return tiebreak[a] > tiebreak[b];
    return members[a] < members[b];
  });
  size_t cap = (c + 1) / 2;
  std::vector<int> kept;
  for (size_t r = 0; r < order.size() && kept.size() < cap; ++r) {
    if (score[order[r]] < median) break;
    kept.push_back(members[order[r]]);
  }
  return kept;
}

}  // namespace

long long min_feasible_budget(int n, int k) {
  if (k < 2 || n < k) throw std::invalid_argument("need n >= k >= 2");
  return (long long)std::ceil(set_count_bound(n, k));
}

RunReport uniform_allocation(const PLInstance& inst, const BudgetConfig& cfg) {
  const int n = inst.n();
  if (cfg.k < 2 || cfg.k > n) throw std::invalid_argument("need 2 <= k <= n");
  if (cfg.m < 1 || cfg.m > cfg.k - 1)
    throw std::invalid_argument("need 1 <= m <= k-1");
  long long q_per_set =
      (long long)std::floor(cfg.k * (double)cfg.Q / (2.0 * n + cfg.k * std::log2((double)cfg.k)));
  if (q_per_set < 1)
    throw std::invalid_argument(
        "budget too small; minimum feasible Q is " +
        std::to_string(min_feasible_budget(n, cfg.k)));

  PlayOracle oracle(inst, cfg.seed);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> A = all;

  while ((int)A.size() >= cfg.k) {
    BatchPlan plan = partition(A, cfg.k);
    std::vector<int> next = plan.remainder;
    for (const auto& batch : plan.batches) {
      WinCountMatrix w(batch);
      oracle.play_batch(batch, cfg.m, q_per_set, w);
      std::vector<long long> score(batch.size(), 0);
      std::vector<double> tiebreak(batch.size(), 0.0);
      for (size_t a = 0; a < batch.size(); ++a) {
        for (size_t b = 0; b < batch.size(); ++b) {
          if (a == b) continue;
          double p = w.empirical_prob(batch[a], batch[b]);
          tiebreak[a] += p;
          if (p > 0.5) ++score[a];
        }
      }
      auto kept = halve(batch, score, tiebreak);
      next.insert(next.end(), kept.begin(), kept.end());
    }
    std::sort(next.begin(), next.end());
    A = std::move(next);
  }

  if (A.size() > 1) {
    // Endgame: play a padded set but score survivors only.
    std::vector<int> pool;
    for (int i : all)
      if (!std::binary_search(A.begin(), A.end(), i)) pool.push_back(i);
    std::vector<int> played = A;
    while ((int)played.size() < cfg.k && !pool.empty()) {
      size_t pick = std::uniform_int_distribution<size_t>(
          0, pool.size() - 1)(oracle.rng());
      played.push_back(pool[pick]);
      pool.erase(pool.begin() + pick);
    }
    std::sort(played.begin(), played.end());

    while (A.size() > 1) {
      WinCountMatrix w(played);
      oracle.play_batch(played, cfg.m, q_per_set, w);
      std::vector<long long> score(A.size(), 0);
      std::vector<double> tiebreak(A.size(), 0.0);
      for (size_t a = 0; a < A.size(); ++a) {
        for (size_t b = 0; b < A.size(); ++b) {
          if (a == b) continue;
          double p = w.empirical_prob(A[a], A[b]);
          tiebreak[a] += p;
          if (p > 0.5) ++score[a];
        }
      }
      A = halve(A, score, tiebreak);
      std::sort(A.begin(), A.end());
    }
  }

  RunReport r;
  r.returned_item = A.front();
  r.total_plays = oracle.total_plays();
  r.item_plays = oracle.item_plays();
  r.completed = true;
  return r;
}

}  // namespace plb
