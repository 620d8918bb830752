#include "plbandits/pac_best_item.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace plb {

namespace {

// Winner rule for one group: any non-padded i whose margin test
// phat_ij + eps_l/2 >= 1/2 holds against every other group member; ties by
// larger sum of phat, then lower id. Falls back to a uniformly random
// non-padded member.
int select_group_winner(const std::vector<int>& group,
                        const std::unordered_set<int>& padded,
                        const WinCountMatrix& w, double eps_l, Rng& rng) {
  int best = -1;
  double best_score = -1.0;
  for (int i : group) {
    if (padded.count(i)) continue;
    bool ok = true;
    double score = 0.0;
    for (int j : group) {
      if (j == i) continue;
      double p = w.empirical_prob(i, j);
      score += p;
      if (p + eps_l / 2.0 < 0.5) {
        ok = false;
        break;
      }
    }
    if (ok && (best < 0 || score > best_score)) {
      best = i;
      best_score = score;
    }
  }
  if (best >= 0) return best;
  std::vector<int> eligible;
  for (int i : group)
    if (!padded.count(i)) eligible.push_back(i);
  return eligible[std::uniform_int_distribution<size_t>(
      0, eligible.size() - 1)(rng)];
}

}  // namespace

SubroutineReport pac_best_item(PlayOracle& oracle, const std::vector<int>& A,
                               const std::vector<int>& universe,
                               const PacBestItemConfig& cfg) {
  if (A.empty()) throw std::invalid_argument("empty item set");
  if (cfg.k < 2) throw std::invalid_argument("k must be >= 2");
  if (cfg.m < 1 || cfg.m > cfg.k - 1)
    throw std::invalid_argument("m must satisfy 1 <= m <= k-1");
  if (!(cfg.eps > 0.0 && cfg.eps <= 0.5))
    throw std::invalid_argument("eps must be in (0, 1/2]");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
    throw std::invalid_argument("delta must be in (0,1)");

  SubroutineReport report;
  long long start_plays = oracle.total_plays();
  if (A.size() == 1) {
    report.returned_item = A.front();
    return report;
  }

  double delta = cfg.delta;
  int pivot = -1;
  if (cfg.use_score_estimate) {
    if (cfg.pivot) {
      pivot = *cfg.pivot;
    } else {
      delta = cfg.delta / 2.0;
      pivot = bootstrap_pivot(oracle, A, universe, cfg.k, cfg.m, cfg.delta / 2.0);
    }
  }

  std::vector<int> S = A;
  std::sort(S.begin(), S.end());
  double eps_l = cfg.eps / 8.0;
  double delta_l = delta / 2.0;
  std::unordered_set<int> padded;
  bool final_override = false;

  BatchPlan plan = partition(S, cfg.k);
  std::vector<int> remainder = plan.remainder;
  std::vector<std::vector<int>> groups = plan.batches;

  while (true) {
    if (final_override) {
      eps_l = cfg.final_eps_num / cfg.final_eps_den * cfg.eps;
      delta_l = delta;
    } else {
      delta_l /= 2.0;
      eps_l *= 0.75;
    }

    SubroutineReport::Phase phase;
    phase.surviving = (int)S.size();
    phase.groups = (int)groups.size();

    std::vector<int> survivors;
    for (const auto& group : groups) {
      double theta_hat;
      if (cfg.use_score_estimate) {
        std::vector<int> rest;
        for (int i : group)
          if (i != pivot) rest.push_back(i);
        ScoreEstimate est =
            score_estimate(oracle, rest, pivot, delta_l, cfg.score_play_cap);
        theta_hat = std::max(est.ratio, 1.0);
      } else {
        theta_hat = (double)cfg.k;
      }
      long long t = (long long)std::ceil(
          16.0 * theta_hat / (cfg.m * eps_l * eps_l) *
          std::log(2.0 * cfg.k / delta_l));
      phase.t_per_group.push_back(t);
      WinCountMatrix w(group);
      int m_eff = std::min<int>(cfg.m, (int)group.size() - 1);
      oracle.play_batch(group, m_eff, t, w);
      survivors.push_back(
          select_group_winner(group, padded, w, eps_l, oracle.rng()));
    }
    report.phases.push_back(std::move(phase));

    survivors.insert(survivors.end(), remainder.begin(), remainder.end());
    std::sort(survivors.begin(), survivors.end());
    S = std::move(survivors);
    remainder.clear();
    if (S.size() == 1) break;

    padded.clear();
    if ((int)S.size() <= cfg.k) {
      std::vector<int> pool;
      for (int i : universe)
        if (!std::binary_search(S.begin(), S.end(), i)) pool.push_back(i);
      int need = cfg.k - (int)S.size();
      for (int p = 0; p < need && !pool.empty(); ++p) {
        size_t pick =
            std::uniform_int_distribution<size_t>(0, pool.size() - 1)(
                oracle.rng());
        padded.insert(pool[pick]);
        S.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
      }
      std::sort(S.begin(), S.end());
      groups = {S};
      final_override = true;
    } else {
      plan = partition(S, cfg.k);
      groups = plan.batches;
      remainder = plan.remainder;
      final_override = false;
    }
  }

  report.returned_item = S.front();
  report.total_plays = oracle.total_plays() - start_plays;
  return report;
}

int bootstrap_pivot(PlayOracle& oracle, const std::vector<int>& A,
                    const std::vector<int>& universe, int k, int m,
                    double delta) {
  PacBestItemConfig cfg;
  cfg.k = k;
  cfg.m = m;
  cfg.eps = 0.5;
  cfg.delta = delta;
  cfg.use_score_estimate = false;
  return pac_best_item(oracle, A, universe, cfg).returned_item;
}

}  // namespace plb
