#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plbandits/bounds.hpp"
#include "plbandits/environments.hpp"
#include "plbandits/experiments.hpp"

namespace {

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> out;
  std::istringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plackett-Luce best-item identification harness"};
  app.require_subcommand(1);

  app.add_subcommand("list-envs", "List built-in environments");

  auto* run = app.add_subcommand("run", "Run a seeded experiment sweep");
  std::string env, theta_file, algo = "pac-wrapper", sweep, out_path, plot_path;
  int k = 5, m = 1, reps = 50;
  double eps = 0.01, delta = 0.01;
  long long q = 0;
  std::uint64_t seed = 0;
  run->add_option("--env", env, "Built-in environment name");
  run->add_option("--theta-file", theta_file, "JSON instance file");
  run->add_option("--algo", algo,
                  "pac-wrapper | uniform-allocation | pac-best-item");
  run->add_option("--k", k, "Subset size");
  run->add_option("--m", m, "Ranking feedback depth");
  run->add_option("--eps", eps, "Accuracy target");
  run->add_option("--delta", delta, "Confidence parameter");
  run->add_option("--q", q, "Play budget (uniform-allocation)");
  run->add_option("--sweep", sweep, "axis:v1,v2,... with axis in eps|m|q");
  run->add_option("--reps", reps, "Replicates per grid point");
  run->add_option("--seed", seed, "Base seed");
  run->add_option("--out", out_path, "Sweep CSV output path");
  run->add_option("--plot", plot_path, "SVG output path");

  auto* bounds = app.add_subcommand("bounds", "Print complexity predictors");
  std::string benv, btheta_file;
  int bk = 5, bm = 1;
  double beps = 0.01, bdelta = 0.01;
  long long bq = 0;
  bounds->add_option("--env", benv, "Built-in environment name");
  bounds->add_option("--theta-file", btheta_file, "JSON instance file");
  bounds->add_option("--k", bk, "Subset size");
  bounds->add_option("--m", bm, "Ranking feedback depth");
  bounds->add_option("--eps", beps, "Accuracy target");
  bounds->add_option("--delta", bdelta, "Confidence parameter");
  bounds->add_option("--q", bq, "Play budget for the success bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-envs")) {
      for (const auto& name : plb::builtin_env_names())
        std::cout << name << '\n';
      return 0;
    }

    if (app.got_subcommand("bounds")) {
      plb::PLInstance inst = benv.empty()
                                 ? plb::load_instance_file(btheta_file)
                                 : plb::load_env(benv);
      plb::ComplexityTerms t =
          plb::compute_complexity_terms(inst, bk, bm, beps, bdelta, bq);
      std::printf("pac_upper_bound    %.17g\n", t.ub_pac);
      std::printf("winner_lower_bound %.17g\n", t.lb_winner);
      std::printf("topm_lower_bound   %.17g\n", t.lb_topm);
      std::printf("delta_tilde        %.17g\n", t.delta_tilde);
      std::printf("ua_success_bound   %.17g\n", t.ua_success_lb);
      return 0;
    }

    plb::ExperimentSpec spec;
    if (!env.empty()) {
      spec.env_name = env;
    } else if (!theta_file.empty()) {
      spec.theta = plb::load_instance_file(theta_file).thetas();
    } else {
      throw std::invalid_argument("one of --env / --theta-file is required");
    }
    spec.algo = plb::algorithm_from_string(algo);
    spec.k = k;
    spec.m = m;
    spec.eps = eps;
    spec.delta = delta;
    spec.Q = q;
    spec.replicates = reps;
    spec.base_seed = seed;
    if (!sweep.empty()) {
      auto colon = sweep.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--sweep expects axis:v1,v2,...");
      spec.axis = plb::axis_from_string(sweep.substr(0, colon));
      spec.grid = parse_values(sweep.substr(colon + 1));
    }

    plb::SweepResult result = plb::run_sweep(spec);
    if (!out_path.empty()) emit_csv(result, out_path);
    if (!plot_path.empty()) emit_plot(result, spec, plot_path);
    for (const auto& r : result.rows)
      std::printf("axis=%g mean_plays=%.6g std=%.6g success=%.3f\n",
                  r.axis_value, r.mean_plays, r.std_plays, r.success_rate);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
