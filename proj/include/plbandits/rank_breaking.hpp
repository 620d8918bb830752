#pragma once
#include <string>
#include <vector>

#include "plbandits/types.hpp"

namespace plb {

// Pairwise win counts w[i][j] (= times i beat j) over a declared item
// universe, filled by rank-breaking top-m feedback. 64-bit counts.
class WinCountMatrix {
 public:
  explicit WinCountMatrix(std::vector<int> universe);

  const std::vector<int>& universe() const { return items_; }
  bool contains(int item) const;

  long long wins(int i, int j) const;
  long long exposures(int i, int j) const;  // n_ij = w_ij + w_ji
  void add_wins(int winner, int loser, long long count);

  // Rank-breaking: each sigma(l) beats every item of S not ranked at or
  // before position l. Pairs outside the declared universe are dropped.
  // sigma must be drawn from S.
  void rank_break_update(const std::vector<int>& S, const RankedFeedback& sigma);

  // w_ij/(w_ij + w_ji), or exactly 1/2 when the pair was never exposed.
  double empirical_prob(int i, int j) const;

  void reset();
  long long total_count() const;
  std::string to_csv() const;

 private:
  int idx(int item) const;

  std::vector<int> items_;     // sorted ascending
  std::vector<int> lookup_;    // item id -> dense index, -1 if absent
  std::vector<long long> w_;   // dense |items|^2
};

}  // namespace plb
