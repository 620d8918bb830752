#pragma once
#include <map>
#include <random>
#include <vector>

#include "plbandits/types.hpp"

namespace plb {

using Rng = std::mt19937_64;

// A Plackett-Luce instance: positive score vector theta over n >= 2 items.
// Immutable after construction; safe to share across threads.
class PLInstance {
 public:
  // normalize: rescale so that max theta == 1 (the sampling distributions are
  // scale invariant, so this only affects gap/bound arithmetic).
  // require_unique_best: reject instances whose argmax is not unique
  // (needed by the eps = 0 algorithms).
  explicit PLInstance(std::vector<double> theta, bool normalize = false,
                      bool require_unique_best = false);

  int n() const { return static_cast<int>(theta_.size()); }
  double theta(int i) const { return theta_[static_cast<size_t>(i)]; }
  const std::vector<double>& thetas() const { return theta_; }
  int best_item() const { return best_; }
  bool has_unique_best() const { return unique_best_; }

  GapProfile gap_profile() const;

  // Theta_S = sum of theta over S. S nonempty, ids in range.
  double subset_mass(const std::vector<int>& S) const;
  // Theta_[k]: sum of the k largest theta values.
  double top_k_mass(int k) const;
  // p_ij = theta_i / (theta_i + theta_j), i != j.
  double pairwise_prob(int i, int j) const;

  // One winner draw from S; inverse-CDF over S in ascending item-id order,
  // consuming exactly one uniform variate. S must be sorted ascending.
  int sample_winner(const std::vector<int>& S, Rng& rng) const;

  // Top-m ranking feedback: m sequential winner draws without replacement.
  // Requires 1 <= m <= |S| - 1.
  RankedFeedback sample_topm(const std::vector<int>& S, int m, Rng& rng) const;

  // Exhaustive enumeration of all |S|!/(|S|-m)! rankings with exact
  // probabilities. Guarded to |S| <= 8.
  std::map<RankedFeedback, double> topm_pmf(const std::vector<int>& S,
                                            int m) const;

 private:
  void check_subset(const std::vector<int>& S) const;

  std::vector<double> theta_;
  int best_ = 0;
  bool unique_best_ = false;
};

}  // namespace plb
