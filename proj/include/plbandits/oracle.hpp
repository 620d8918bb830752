#pragma once
#include <random>
#include <vector>

#include "plbandits/pl_instance.hpp"
#include "plbandits/rank_breaking.hpp"
#include "plbandits/types.hpp"

namespace plb {

// The sampling interface the adaptive algorithms consume. Owns the run's
// random stream and the play accounting (total subset plays and, per item,
// the number of plays it participated in).
//
// play_batch() draws the t plays of a fixed set as one exact multinomial over
// the enumerable top-m outcomes when the outcome space is small, and falls
// back to draw-by-draw sampling otherwise; the resulting win-count
// distribution is identical either way.
class PlayOracle {
 public:
  PlayOracle(const PLInstance& inst, std::uint64_t seed,
             long long max_total_plays = -1);

  const PLInstance& instance() const { return inst_; }
  Rng& rng() { return rng_; }

  long long total_plays() const { return total_; }
  const std::vector<long long>& item_plays() const { return item_plays_; }

  // One play of S with top-m feedback (m = 1: winner feedback).
  RankedFeedback play(const std::vector<int>& S, int m);

  // t plays of S with top-m feedback, rank-broken into w. S sorted ascending.
  void play_batch(const std::vector<int>& S, int m, long long t,
                  WinCountMatrix& w);

  // Plays S u {pivot} until the pivot has won d times; returns the total
  // number of plays consumed. Sampled as d + NegBinomial(d, p) with
  // p = theta_pivot / (theta_pivot + Theta_S), which is the exact law of the
  // stopping time. Throws ScoreEstimateTimeout past play_cap.
  long long plays_until_pivot_wins(const std::vector<int>& S, int pivot,
                                   long long d, long long play_cap);

 private:
  void charge(const std::vector<int>& S, long long t);

  const PLInstance& inst_;
  Rng rng_;
  long long total_ = 0;
  long long max_total_;
  std::vector<long long> item_plays_;
};

}  // namespace plb
