// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any fail.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "plbandits/bounds.hpp"
#include "plbandits/environments.hpp"
#include "plbandits/experiments.hpp"
#include "plbandits/oracle.hpp"
#include "plbandits/pac_wrapper.hpp"
#include "plbandits/rank_breaking.hpp"
#include "plbandits/subroutines.hpp"
#include "plbandits/uniform_allocation.hpp"

using namespace plb;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// --- 1: sampler distributions match exhaustive enumeration -----------------

bool check_samplers(std::string& detail) {
  PLInstance inst({1.0, 0.8, 0.6, 0.45, 0.3, 0.15});
  Rng rng(20240601);
  double worst_winner = 0.0, worst_topm = 0.0;
  for (int mask = 1; mask < (1 << 6); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) S.push_back(i);
    if (S.size() < 2 || S.size() > 5) continue;

    // winner frequencies over 1e5 draws
    {
      const int N = 100000;
      std::vector<long long> counts(6, 0);
      for (int t = 0; t < N; ++t) ++counts[(size_t)inst.sample_winner(S, rng)];
      double mass = inst.subset_mass(S);
      for (int i : S) {
        double diff =
            std::abs((double)counts[(size_t)i] / N - inst.theta(i) / mass);
        worst_winner = std::max(worst_winner, diff);
      }
    }

    // top-m ranking frequencies over 1e6 draws per m
    for (int m = 1; m <= (int)S.size() - 1; ++m) {
      auto pmf = inst.topm_pmf(S, m);
      size_t space = 1;
      for (int j = 0; j < m; ++j) space *= 6;
      std::vector<long long> counts(space, 0);
      const int N = 1000000;
      for (int t = 0; t < N; ++t) {
        RankedFeedback sigma = inst.sample_topm(S, m, rng);
        size_t key = 0, mult = 1;
        for (int v : sigma) {
          key += (size_t)v * mult;
          mult *= 6;
        }
        ++counts[key];
      }
      for (const auto& [sigma, p] : pmf) {
        size_t key = 0, mult = 1;
        for (int v : sigma) {
          key += (size_t)v * mult;
          mult *= 6;
        }
        double diff = std::abs((double)counts[key] / N - p);
        worst_topm = std::max(worst_topm, diff);
      }
    }
  }
  detail = "max winner dev " + fmt(worst_winner) + ", max ranking dev " +
           fmt(worst_topm);
  return worst_winner <= 0.01 && worst_topm <= 0.005;
}

// --- 2: rank-breaking conservation -----------------------------------------

bool check_conservation(std::string& detail) {
  std::mt19937_64 meta(7);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 2 + (int)(meta() % 7);
    int m = 1 + (int)(meta() % (unsigned)(k - 1));
    long long T = 1 + (long long)(meta() % 60);
    std::vector<double> theta((size_t)k);
    for (auto& t : theta) t = 0.05 + (double)(meta() % 100) / 40.0;
    PLInstance inst(theta);
    std::vector<int> S((size_t)k);
    std::iota(S.begin(), S.end(), 0);
    WinCountMatrix w(S);
    Rng rng(meta());
    for (long long t = 0; t < T; ++t)
      w.rank_break_update(S, inst.sample_topm(S, m, rng));
    long long expect = T * m * (2 * k - m - 1) / 2;
    if (w.total_count() != expect) {
      detail = "mismatch at k=" + std::to_string(k) + " m=" + std::to_string(m);
      return false;
    }
  }
  detail = "40 random (k,m,T) configurations exact";
  return true;
}

// --- 3: exact identification success rate ----------------------------------

bool check_pac_correctness(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (const char* env : {"g1", "g4", "arith", "geo"}) {
    PLInstance inst = load_env(env);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      WrapperConfig cfg;
      cfg.k = 5;
      cfg.m = 1;
      cfg.eps = 0.0;
      cfg.delta = 0.1;
      cfg.seed = seed;
      if (pac_wrapper(inst, cfg).returned_item == inst.best_item()) ++hits;
    }
    os << env << "=" << hits << "/50 ";
    if (hits < 43) ok = false;
  }
  detail = os.str();
  return ok;
}

// --- 4: accuracy-target plateau on geo -------------------------------------

double mean_wrapper_plays(const PLInstance& inst, double eps, int m, int reps,
                          std::uint64_t seed0) {
  double sum = 0.0;
  for (int r = 0; r < reps; ++r) {
    WrapperConfig cfg;
    cfg.k = 5;
    cfg.m = m;
    cfg.eps = eps;
    cfg.delta = 0.1;
    cfg.seed = seed0 + (std::uint64_t)r;
    sum += (double)pac_wrapper(inst, cfg).total_plays;
  }
  return sum / reps;
}

bool check_eps_plateau(std::string& detail) {
  PLInstance geo = load_env("geo");
  double dmin = geo.gap_profile().delta_min;  // 0.2
  double p4 = mean_wrapper_plays(geo, dmin / 4, 1, 25, 100);
  double p8 = mean_wrapper_plays(geo, dmin / 8, 1, 25, 100);
  double big = mean_wrapper_plays(geo, 4 * dmin, 1, 25, 100);
  double rel = std::abs(p4 - p8) / std::max(p4, p8);
  double frac = big / p4;
  detail = "plateau gap " + fmt(100 * rel) + "%, coarse/fine ratio " +
           fmt(frac);
  return rel <= 0.15 && frac <= 0.5;
}

// --- 5: ranking depth halves the sample complexity -------------------------

bool check_m_scaling(std::string& detail) {
  PLInstance arith = load_env("arith");
  double p1 = mean_wrapper_plays(arith, 0.0, 1, 25, 300);
  double p2 = mean_wrapper_plays(arith, 0.0, 2, 25, 300);
  double p4 = mean_wrapper_plays(arith, 0.0, 4, 25, 300);
  double r21 = p2 / p1, r42 = p4 / p2;
  detail = "m2/m1 " + fmt(r21) + ", m4/m2 " + fmt(r42);
  return r21 >= 0.35 && r21 <= 0.75 && r42 >= 0.35 && r42 <= 0.80;
}

// --- 6: itemwise survival tiers on g4 --------------------------------------

bool check_itemwise_tiers(std::string& detail) {
  PLInstance g4 = load_env("g4");
  const int R = 50;
  // tier index per item: 0 for theta=1, 1 for 0.7, 2 for 0.5, 3 for 0.01
  std::vector<int> tier_of(16, 3);
  tier_of[0] = 0;
  for (int i = 1; i <= 5; ++i) tier_of[(size_t)i] = 1;
  for (int i = 6; i <= 10; ++i) tier_of[(size_t)i] = 2;
  std::vector<std::vector<double>> tier_means(4);
  for (std::uint64_t seed = 0; seed < R; ++seed) {
    WrapperConfig cfg;
    cfg.k = 5;
    cfg.eps = 0.0;
    cfg.delta = 0.1;
    cfg.seed = 500 + seed;
    RunReport rep = pac_wrapper(g4, cfg);
    std::vector<double> sum(4, 0.0);
    std::vector<int> cnt(4, 0);
    for (int i = 0; i < 16; ++i) {
      sum[(size_t)tier_of[(size_t)i]] += (double)rep.item_plays[(size_t)i];
      ++cnt[(size_t)tier_of[(size_t)i]];
    }
    for (int t = 0; t < 4; ++t)
      tier_means[(size_t)t].push_back(sum[(size_t)t] / cnt[(size_t)t]);
  }
  double mean[4], se[4];
  for (int t = 0; t < 4; ++t) {
    const auto& v = tier_means[(size_t)t];
    double m = std::accumulate(v.begin(), v.end(), 0.0) / (double)v.size();
    double var = 0.0;
    for (double x : v) var += (x - m) * (x - m);
    var /= (double)(v.size() - 1);
    mean[t] = m;
    se[t] = std::sqrt(var / (double)v.size());
  }
  bool ok = true;
  for (int t = 0; t < 3; ++t) {
    double sep = mean[t] - mean[t + 1];
    double tol = 2.0 * std::sqrt(se[t] * se[t] + se[t + 1] * se[t + 1]);
    if (sep < tol) ok = false;
  }
  detail = "tier means " + fmt(mean[0]) + " > " + fmt(mean[1]) + " > " +
           fmt(mean[2]) + " > " + fmt(mean[3]);
  return ok;
}

// --- 7: fixed-budget success is monotone and budget-capped ------------------

bool check_budget_monotone(std::string& detail) {
  PLInstance g4 = load_env("g4");
  std::vector<long long> grid = {300, 600, 1200, 2400, 4800, 9600};
  const int R = 50;
  std::vector<double> succ;
  for (long long Q : grid) {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < R; ++seed) {
      BudgetConfig cfg;
      cfg.Q = Q;
      cfg.k = 5;
      cfg.m = 1;
      cfg.seed = 700 + seed;
      RunReport rep = uniform_allocation(g4, cfg);
      if (rep.total_plays > Q) {
        detail = "budget exceeded at Q=" + std::to_string(Q);
        return false;
      }
      if (rep.returned_item == g4.best_item()) ++hits;
    }
    succ.push_back((double)hits / R);
  }
  std::ostringstream os;
  for (double s : succ) os << fmt(s) << " ";
  detail = os.str();
  for (size_t i = 1; i < succ.size(); ++i) {
    double se = std::sqrt(succ[i - 1] * (1 - succ[i - 1]) / R +
                          succ[i] * (1 - succ[i]) / R);
    if (succ[i] < succ[i - 1] - 2.0 * se) return false;
  }
  return succ.back() >= 0.95;
}

// --- 8: score estimation accuracy and play bound ----------------------------

bool check_score_estimate(std::string& detail) {
  int ok_calls = 0, total_calls = 0;
  bool plays_ok = true;
  const double delta = 0.1;
  struct Setup {
    std::vector<double> theta;
    std::vector<int> S;
    double mass;
  };
  std::vector<Setup> setups = {
      {{1.0, 0.5}, {1}, 0.5},
      {{1.0, 1.0}, {1}, 1.0},
      {{1.0, 1.0, 1.0, 1.0}, {1, 2, 3}, 3.0},
  };
  for (size_t cfg_i = 0; cfg_i < setups.size(); ++cfg_i) {
    const Setup& su = setups[cfg_i];
    PLInstance inst(su.theta);
    double cap = 80.0 * (su.mass + 1.0) * std::log(4.0 / delta);
    for (int r = 0; r < 167; ++r) {
      PlayOracle oracle(inst, 9000 + 1000 * (std::uint64_t)cfg_i +
                                  (std::uint64_t)r);
      ScoreEstimate est = score_estimate(oracle, su.S, 0, delta);
      ++total_calls;
      if (std::abs(est.ratio - su.mass) <= 0.5 * std::max(su.mass, 1.0))
        ++ok_calls;
      if ((double)est.plays_used > cap) plays_ok = false;
    }
  }
  double frac = (double)ok_calls / total_calls;
  detail = fmt(100 * frac) + "% within tolerance over " +
           std::to_string(total_calls) + " calls";
  return frac >= 0.87 && plays_ok;
}

// --- 9: closed-form bound regressions ---------------------------------------

bool check_bound_regressions(std::string& detail) {
  PLInstance g1 = load_env("g1");
  PLInstance g4 = load_env("g4");
  double tol = 1e-9;

  double ub = pac_upper_bound(g1, 5, 1, 0.0, 0.1);
  double ub_expect = (1.6 / 5.0) * 15.0 * (1.0 / 0.36) * std::log(50.0) *
                     std::log(1.0 / 0.6);
  double lb = winner_lower_bound(g1, 5, 0.1);
  double lb_expect = 15.0 * (0.8 * 0.2) / 0.36 * std::log(10.0);
  double be = budget_error_bound(g1, 10, 1);
  double be_expect = std::exp(-2.0 * 10.0 * 0.6);
  double ua = ua_success_bound(g4, 16, 5, 1, 100000);
  double ua_expect =
      1.0 - 4.0 * std::log2(16.0) * (4.0 / 5.0) *
                std::exp(-(1e5 * 0.09) / (16.0 * (32.0 + 5.0 * std::log2(5.0))));

  bool ok = std::abs(ub - ub_expect) < tol && std::abs(lb - lb_expect) < tol &&
            std::abs(be - be_expect) < tol && std::abs(ua - ua_expect) < tol &&
            std::abs(delta_tilde(g1) - 0.6) < tol &&
            min_feasible_budget(16, 5) == 9 && min_feasible_budget(2, 2) == 3;
  detail = "pac ub " + fmt(ub) + ", winner lb " + fmt(lb);
  return ok;
}

// --- 10: byte-identical sweep outputs ---------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool check_determinism(std::string& detail) {
  ExperimentSpec ua;
  ua.env_name = "g4";
  ua.algo = Algorithm::UniformAllocation;
  ua.axis = SweepAxis::Q;
  ua.grid = {400, 1600, 6400};
  ua.replicates = 12;
  ua.base_seed = 31;

  ExperimentSpec ws;
  ws.env_name = "geo";
  ws.algo = Algorithm::PacWrapper;
  ws.axis = SweepAxis::Eps;
  ws.grid = {0.1, 0.2, 0.4};
  ws.replicates = 6;
  ws.delta = 0.1;
  ws.base_seed = 77;

  for (const ExperimentSpec* spec : {&ua, &ws}) {
    ExperimentSpec a = *spec, b = *spec;
    a.threads = 1;
    b.threads = 4;
    emit_csv(run_sweep(a), "/tmp/plb_acc_a.csv");
    emit_csv(run_sweep(b), "/tmp/plb_acc_b.csv");
    std::string sa = slurp("/tmp/plb_acc_a.csv");
    if (sa.empty() || sa != slurp("/tmp/plb_acc_b.csv")) {
      detail = "sweep outputs diverged";
      std::remove("/tmp/plb_acc_a.csv");
      std::remove("/tmp/plb_acc_b.csv");
      return false;
    }
  }
  std::remove("/tmp/plb_acc_a.csv");
  std::remove("/tmp/plb_acc_b.csv");
  detail = "two sweep families byte-identical across reruns and thread counts";
  return true;
}

}  // namespace

int main() {
  std::string d;
  bool ok;

  ok = check_samplers(d);
  report(1, "sampler distributions match enumeration", ok, d);
  ok = check_conservation(d);
  report(2, "rank-breaking pairwise conservation", ok, d);
  ok = check_pac_correctness(d);
  report(3, "exact best-item identification rate", ok, d);
  ok = check_eps_plateau(d);
  report(4, "sample complexity plateaus below the gap", ok, d);
  ok = check_m_scaling(d);
  report(5, "deeper ranking feedback halves plays", ok, d);
  ok = check_itemwise_tiers(d);
  report(6, "itemwise survival tiers separate", ok, d);
  ok = check_budget_monotone(d);
  report(7, "fixed-budget success monotone and capped", ok, d);
  ok = check_score_estimate(d);
  report(8, "score estimation accuracy and play bound", ok, d);
  ok = check_bound_regressions(d);
  report(9, "closed-form bound regressions", ok, d);
  ok = check_determinism(d);
  report(10, "seeded sweeps are byte-identical", ok, d);

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
