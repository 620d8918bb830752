#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "plbandits/pl_instance.hpp"

namespace plb {

enum class Algorithm { PacWrapper, UniformAllocation, PacBestItem };
enum class SweepAxis { None, Eps, M, Q };

Algorithm algorithm_from_string(const std::string& s);
SweepAxis axis_from_string(const std::string& s);

struct ExperimentSpec {
  std::string env_name;       // built-in environment, or empty for theta below
  std::vector<double> theta;  // inline instance when env_name is empty
  Algorithm algo = Algorithm::PacWrapper;
  SweepAxis axis = SweepAxis::None;
  std::vector<double> grid;   // axis values; m and Q entries are integral
  int replicates = 50;
  std::uint64_t base_seed = 0;
  int k = 5;
  int m = 1;
  double eps = 0.01;
  double delta = 0.01;
  long long Q = 0;            // uniform-allocation budget (when not swept)
  int threads = 0;            // 0: hardware concurrency
};

struct SweepResult {
  struct Row {
    double axis_value = 0.0;
    double mean_plays = 0.0;
    double std_plays = 0.0;
    double success_rate = 0.0;
    std::vector<double> mean_item_plays;
    double theory_ub = 0.0;
    double theory_lb = 0.0;
  };
  std::vector<Row> rows;
};

PLInstance spec_instance(const ExperimentSpec& spec);

// Runs replicates x grid seeded runs (seed = base_seed + replicate index)
// and aggregates. Deterministic given the spec; replicates fan out across
// worker threads with a fixed reduction order.
SweepResult run_sweep(const ExperimentSpec& spec);

void emit_csv(const SweepResult& result, const std::string& path);
SweepResult parse_sweep_csv(const std::string& path);  // scalar columns only
void emit_survival_csv(const SweepResult& result, const std::string& path);

// Self-contained SVG: curve plots for sweeps (log axes where the figure
// family calls for them), bar chart of per-item play counts for axis None.
void emit_plot(const SweepResult& result, const ExperimentSpec& spec,
               const std::string& path);

}  // namespace plb
