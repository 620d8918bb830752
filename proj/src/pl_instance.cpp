#include "plbandits/pl_instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace plb {

PLInstance::PLInstance(std::vector<double> theta, bool normalize,
                       bool require_unique_best)
    : theta_(std::move(theta)) {
  if (theta_.size() < 2) throw std::invalid_argument("need at least 2 items");
  for (double t : theta_) {
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::invalid_argument("all theta must be positive and finite");
  }
  if (normalize) {
    double mx = *std::max_element(theta_.begin(), theta_.end());
    for (double& t : theta_) t /= mx;
  }
  best_ = static_cast<int>(
      std::max_element(theta_.begin(), theta_.end()) - theta_.begin());
  unique_best_ =
      std::count(theta_.begin(), theta_.end(), theta_[best_]) == 1;
  if (require_unique_best && !unique_best_)
    throw std::invalid_argument("best item is not unique");
}

GapProfile PLInstance::gap_profile() const {
  GapProfile g;
  g.best_item = best_;
  double mx = theta_[best_];
  g.delta.resize(theta_.size());
  g.delta_min = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < theta_.size(); ++i) {
    g.delta[i] = mx - theta_[i];
    if (static_cast<int>(i) != best_ && g.delta[i] < g.delta_min)
      g.delta_min = g.delta[i];
  }
  return g;
}

void PLInstance::check_subset(const std::vector<int>& S) const {
  if (S.empty()) throw std::invalid_argument("empty subset");
  for (int i : S)
    if (i < 0 || i >= n()) throw std::invalid_argument("item id out of range");
}

double PLInstance::subset_mass(const std::vector<int>& S) const {
  check_subset(S);
  double m = 0.0;
  for (int i : S) m += theta_[i];
  return m;
}

double PLInstance::top_k_mass(int k) const {
  if (k < 1 || k > n()) throw std::invalid_argument("k out of range");
  std::vector<double> v = theta_;
  std::partial_sort(v.begin(), v.begin() + k, v.end(), std::greater<>());
  return std::accumulate(v.begin(), v.begin() + k, 0.0);
}

double PLInstance::pairwise_prob(int i, int j) const {
  if (i == j) throw std::invalid_argument("pairwise_prob requires i != j");
  if (i < 0 || i >= n() || j < 0 || j >= n())
    throw std::invalid_argument("item id out of range");
  return theta_[i] / (theta_[i] + theta_[j]);
}

int PLInstance::sample_winner(const std::vector<int>& S, Rng& rng) const {
  check_subset(S);
  double total = 0.0;
  for (int i : S) total += theta_[i];
  double u = std::uniform_real_distribution<double>(0.0, total)(rng);
  double acc = 0.0;
  for (int i : S) {
    acc += theta_[i];
    if (u < acc) return i;
  }
  return S.back();
}

RankedFeedback PLInstance::sample_topm(const std::vector<int>& S, int m,
                                       Rng& rng) const {
  check_subset(S);
  if (m < 1 || m > static_cast<int>(S.size()) - 1)
    throw std::invalid_argument("m out of range (need 1 <= m <= |S|-1)");
  std::vector<int> rest = S;
  RankedFeedback out;
  out.reserve(m);
  for (int l = 0; l < m; ++l) {
    int w = sample_winner(rest, rng);
    out.push_back(w);
    rest.erase(std::find(rest.begin(), rest.end(), w));
  }
  return out;
}

namespace {
void enumerate_rankings(const std::vector<double>& theta,
                        std::vector<int>& rest, int m, double prob,
                        RankedFeedback& prefix,
                        std::map<RankedFeedback, double>& out) {
  if (static_cast<int>(prefix.size()) == m) {
    out[prefix] = prob;
    return;
  }
  double total = 0.0;
  for (int i : rest) total += theta[i];
  for (size_t idx = 0; idx < rest.size(); ++idx) {
    int i = rest[idx];
    prefix.push_back(i);
    rest.erase(rest.begin() + idx);
    enumerate_rankings(theta, rest, m, prob * theta[i] / total, prefix, out);
    rest.insert(rest.begin() + idx, i);
    prefix.pop_back();
  }
}
}  // namespace

std::map<RankedFeedback, double> PLInstance::topm_pmf(
    const std::vector<int>& S, int m) const {
  check_subset(S);
  if (S.size() > 8)
    throw std::length_error("topm_pmf limited to |S| <= 8");
  if (m < 1 || m > static_cast<int>(S.size()) - 1)
    throw std::invalid_argument("m out of range (need 1 <= m <= |S|-1)");
  std::map<RankedFeedback, double> out;
  std::vector<int> rest = S;
  RankedFeedback prefix;
  enumerate_rankings(theta_, rest, m, 1.0, prefix, out);
  return out;
}

}  // namespace plb
