#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plb {

// An ordered list of distinct items observed from a subset play.
// size() == 1 encodes plain winner feedback.
using RankedFeedback = std::vector<int>;

struct GapProfile {
  std::vector<double> delta;  // theta_max - theta_i
  double delta_min = 0.0;     // min over suboptimal items
  int best_item = 0;
};

struct ScoreEstimate {
  double ratio = 0.0;           // Z / d
  long long plays_used = 0;     // total subset plays consumed
  long long wins_of_pivot = 0;  // d
};

// Output of partition(): full-size batches plus a possibly-short trailing
// remainder (empty when the input size divides evenly).
struct BatchPlan {
  std::vector<std::vector<int>> batches;
  std::vector<int> remainder;
};

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

class ScoreEstimateTimeout : public std::runtime_error {
 public:
  explicit ScoreEstimateTimeout(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace plb
