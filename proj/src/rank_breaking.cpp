#include "plbandits/rank_breaking.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plb {

WinCountMatrix::WinCountMatrix(std::vector<int> universe)
    : items_(std::move(universe)) {
  if (items_.empty()) throw std::invalid_argument("empty universe");
  std::sort(items_.begin(), items_.end());
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
    throw std::invalid_argument("duplicate items in universe");
  if (items_.front() < 0) throw std::invalid_argument("negative item id");
  lookup_.assign(items_.back() + 1, -1);
  for (size_t i = 0; i < items_.size(); ++i) lookup_[items_[i]] = (int)i;
  w_.assign(items_.size() * items_.size(), 0);
}

bool WinCountMatrix::contains(int item) const {
  return item >= 0 && item < (int)lookup_.size() && lookup_[item] >= 0;
}

int WinCountMatrix::idx(int item) const {
  if (!contains(item)) throw std::invalid_argument("item not in universe");
  return lookup_[item];
}

long long WinCountMatrix::wins(int i, int j) const {
  return w_[idx(i) * items_.size() + idx(j)];
}

long long WinCountMatrix::exposures(int i, int j) const {
  return wins(i, j) + wins(j, i);
}

void WinCountMatrix::add_wins(int winner, int loser, long long count) {
  if (winner == loser) throw std::invalid_argument("self comparison");
  if (count < 0) throw std::invalid_argument("negative count");
  w_[idx(winner) * items_.size() + idx(loser)] += count;
}

void WinCountMatrix::rank_break_update(const std::vector<int>& S,
                                       const RankedFeedback& sigma) {
  for (int it : sigma)
    if (std::find(S.begin(), S.end(), it) == S.end())
      throw std::invalid_argument("ranked item not in played set");
  for (size_t l = 0; l < sigma.size(); ++l) {
    int winner = sigma[l];
    bool win_in = contains(winner);
    for (int j : S) {
      if (j == winner) continue;
      if (std::find(sigma.begin(), sigma.begin() + l, j) !=
          sigma.begin() + l)
        continue;  // j ranked before winner
      if (win_in && contains(j))
        w_[lookup_[winner] * items_.size() + lookup_[j]] += 1;
    }
  }
}

double WinCountMatrix::empirical_prob(int i, int j) const {
  if (i == j) throw std::invalid_argument("empirical_prob requires i != j");
  long long wij = wins(i, j), wji = wins(j, i);
  long long nij = wij + wji;
  if (nij == 0) return 0.5;
  return (double)wij / (double)nij;
}

void WinCountMatrix::reset() { std::fill(w_.begin(), w_.end(), 0); }

long long WinCountMatrix::total_count() const {
  return std::accumulate(w_.begin(), w_.end(), 0LL);
}

std::string WinCountMatrix::to_csv() const {
  std::ostringstream os;
  os << "row_item,col_item,count\n";
  for (size_t a = 0; a < items_.size(); ++a)
    for (size_t b = 0; b < items_.size(); ++b)
      if (a != b)
        os << items_[a] << ',' << items_[b] << ',' << w_[a * items_.size() + b]
           << '\n';
  return os.str();
}

}  // namespace plb
