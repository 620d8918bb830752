#include "plbandits/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plb {

PlayOracle::PlayOracle(const PLInstance& inst, std::uint64_t seed,
                       long long max_total_plays)
    : inst_(inst), rng_(seed), max_total_(max_total_plays),
      item_plays_(inst.n(), 0) {}

void PlayOracle::charge(const std::vector<int>& S, long long t) {
  if (max_total_ >= 0 && total_ + t > max_total_)
    throw BudgetExhausted("global play budget exhausted");
  total_ += t;
  for (int i : S) item_plays_[i] += t;
}

RankedFeedback PlayOracle::play(const std::vector<int>& S, int m) {
  charge(S, 1);
  if (m == 1 || S.size() == 1) return {inst_.sample_winner(S, rng_)};
  return inst_.sample_topm(S, m, rng_);
}

namespace {

struct Outcome {
  RankedFeedback sigma;
  double prob;
};

void enumerate(const PLInstance& inst, std::vector<int>& rest, int m,
               double prob, RankedFeedback& prefix, std::vector<Outcome>& out) {
  if ((int)prefix.size() == m) {
    out.push_back({prefix, prob});
    return;
  }
  double total = 0.0;
  for (int i : rest) total += inst.theta(i);
  for (size_t idx = 0; idx < rest.size(); ++idx) {
    int i = rest[idx];
    prefix.push_back(i);
    rest.erase(rest.begin() + idx);
    enumerate(inst, rest, m, prob * inst.theta(i) / total, prefix, out);
    rest.insert(rest.begin() + idx, i);
    prefix.pop_back();
  }
}

long long outcome_count(size_t s, int m) {
  long long c = 1;
  for (int j = 0; j < m; ++j) c *= (long long)(s - j);
  return c;
}

}  // namespace

void PlayOracle::play_batch(const std::vector<int>& S, int m, long long t,
                            WinCountMatrix& w) {
  if (t < 0) throw std::invalid_argument("negative play count");
  if (t == 0) return;
  if (m < 1 || (S.size() > 1 && m > (int)S.size() - 1))
    throw std::invalid_argument("m out of range");
  charge(S, t);
  if (S.size() == 1) return;  // no pairwise information

  bool enumerable = S.size() <= 8 && outcome_count(S.size(), m) <= 4096;
  if (!enumerable || t < 2 * outcome_count(S.size(), m)) {
    for (long long r = 0; r < t; ++r) {
      RankedFeedback sigma = (m == 1)
                                 ? RankedFeedback{inst_.sample_winner(S, rng_)}
                                 : inst_.sample_topm(S, m, rng_);
      w.rank_break_update(S, sigma);
    }
    return;
  }

  std::vector<Outcome> outs;
  {
    std::vector<int> rest = S;
    RankedFeedback prefix;
    enumerate(inst_, rest, m, 1.0, prefix, outs);
  }
  // Multinomial counts via sequential conditional binomials.
  long long remaining = t;
  double psum = 1.0;
  for (size_t o = 0; o + 1 < outs.size() && remaining > 0; ++o) {
    double p = std::clamp(outs[o].prob / psum, 0.0, 1.0);
    long long c =
        std::binomial_distribution<long long>(remaining, p)(rng_);
    if (c > 0) {
      for (size_t l = 0; l < outs[o].sigma.size(); ++l) {
        int winner = outs[o].sigma[l];
        if (!w.contains(winner)) continue;
        for (int j : S) {
          if (j == winner) continue;
          if (std::find(outs[o].sigma.begin(), outs[o].sigma.begin() + l, j) !=
              outs[o].sigma.begin() + l)
            continue;
          if (w.contains(j)) w.add_wins(winner, j, c);
        }
      }
    }
    remaining -= c;
    psum -= outs[o].prob;
  }
  if (remaining > 0) {
    const auto& last = outs.back().sigma;
    for (size_t l = 0; l < last.size(); ++l) {
      int winner = last[l];
      if (!w.contains(winner)) continue;
      for (int j : S) {
        if (j == winner) continue;
        if (std::find(last.begin(), last.begin() + l, j) != last.begin() + l)
          continue;
        if (w.contains(j)) w.add_wins(winner, j, remaining);
      }
    }
  }
}

long long PlayOracle::plays_until_pivot_wins(const std::vector<int>& S,
                                             int pivot, long long d,
                                             long long play_cap) {
  for (int i : S)
    if (i == pivot) throw std::invalid_argument("pivot must not be in S");
  double theta_b = inst_.theta(pivot);
  double mass = inst_.subset_mass(S);
  double p = theta_b / (theta_b + mass);
  long long failures =
      std::negative_binomial_distribution<long long>(d, p)(rng_);
  long long total = d + failures;
  std::vector<int> played = S;
  played.push_back(pivot);
  std::sort(played.begin(), played.end());
  if (play_cap >= 0 && total > play_cap) {
    charge(played, play_cap);
    throw ScoreEstimateTimeout("score estimation exceeded play cap");
  }
  charge(played, total);
  return total;
}

}  // namespace plb
