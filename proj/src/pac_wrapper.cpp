#include "plbandits/pac_wrapper.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "plbandits/subroutines.hpp"

namespace plb {

namespace {

void validate(const PLInstance& inst, const WrapperConfig& cfg) {
  int n = inst.n();
  if (cfg.k < 2 || cfg.k > n)
    throw std::invalid_argument("need 2 <= k <= n");
  if (cfg.m < 1 || cfg.m > cfg.k - 1)
    throw std::invalid_argument("need 1 <= m <= k-1");
  if (!(cfg.eps >= 0.0 && cfg.eps <= 1.0))
    throw std::invalid_argument("eps must be in [0,1]");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
    throw std::invalid_argument("delta must be in (0,1)");
  if (cfg.eps == 0.0 && !inst.has_unique_best())
    throw std::invalid_argument("eps = 0 requires a unique best item");
}

RunReport finish(int item, const PlayOracle& oracle, WrapperTrace trace,
                 bool completed) {
  RunReport r;
  r.returned_item = item;
  r.total_plays = oracle.total_plays();
  r.item_plays = oracle.item_plays();
  r.trace = std::move(trace);
  r.completed = completed;
  return r;
}

}  // namespace

RunReport pac_wrapper(const PLInstance& inst, const WrapperConfig& cfg) {
  validate(inst, cfg);
  const int n = inst.n();
  PlayOracle oracle(inst, cfg.seed, cfg.play_budget);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);

  std::vector<int> A = all;
  int s = 1;
  WrapperTrace trace;

  try {
    while ((int)A.size() >= cfg.k) {
      WrapperTrace::Phase phase;
      phase.s = s;
      phase.endgame = false;
      phase.eps_s = std::ldexp(1.0, -(s + 2));  // 1 / 2^{s+2}
      phase.delta_s = cfg.delta / (cfg.delta_numer_main * s * s * s);
      phase.surviving_before = A;

      PacBestItemConfig sub;
      sub.k = cfg.k;
      sub.m = cfg.m;
      sub.eps = cfg.eps > 0.0 ? phase.eps_s / 4.0 : phase.eps_s;
      sub.delta = phase.delta_s;
      sub.score_play_cap = cfg.score_play_cap;
      SubroutineReport subrep = pac_best_item(oracle, A, all, sub);
      int pivot = subrep.returned_item;
      phase.pivot = pivot;
      phase.subroutine_plays = subrep.total_plays;

      if (cfg.eps > 0.0 && phase.eps_s <= cfg.eps) {
        trace.phases.push_back(std::move(phase));
        return finish(pivot, oracle, std::move(trace), true);
      }

      std::vector<int> rest;
      for (int i : A)
        if (i != pivot) rest.push_back(i);
      BatchPlan plan = partition(rest, cfg.k - 1);

      std::vector<int> next = {pivot};
      for (const auto& batch : plan.batches) {
        ScoreEstimate est = score_estimate(oracle, batch, pivot, phase.delta_s,
                                           cfg.score_play_cap);
        double theta_hat = clamp_theta_hat(est.ratio);
        phase.theta_hat.push_back(theta_hat);

        std::vector<int> played = batch;
        played.push_back(pivot);
        std::sort(played.begin(), played.end());
        long long t = (long long)std::ceil(
            2.0 * theta_hat / (cfg.m * phase.eps_s * phase.eps_s) *
            std::log(cfg.k / phase.delta_s));
        phase.t_s.push_back(t);

        WinCountMatrix w(played);
        oracle.play_batch(played, cfg.m, t, w);
        for (int i : batch) {
          if (w.empirical_prob(i, pivot) > 0.5 - phase.eps_s)
            next.push_back(i);
          else
            phase.eliminated.push_back(i);
        }
      }
      next.insert(next.end(), plan.remainder.begin(), plan.remainder.end());
      std::sort(next.begin(), next.end());
      A = std::move(next);
      trace.phases.push_back(std::move(phase));
      ++s;
    }

    if (A.size() == 1)
      return finish(A.front(), oracle, std::move(trace), true);

    // Endgame: below k survivors. The played set is padded once with the
    // lowest-id eliminated items; padded items are never retained nor
    // eligible as pivot, and win counts accumulate across endgame phases.
    std::vector<int> played = A;
    for (int i : all) {
      if ((int)played.size() >= cfg.k) break;
      if (!std::binary_search(A.begin(), A.end(), i)) played.push_back(i);
    }
    std::sort(played.begin(), played.end());
    WinCountMatrix w(played);

    while (A.size() > 1) {
      WrapperTrace::Phase phase;
      phase.s = s;
      phase.endgame = true;
      phase.eps_s = std::ldexp(1.0, -(s + 2));
      phase.delta_s = cfg.delta / (cfg.delta_numer_endgame * s * s * s);
      phase.surviving_before = A;

      PacBestItemConfig sub;
      sub.k = cfg.k;
      sub.m = cfg.m;
      sub.eps = cfg.eps > 0.0 ? phase.eps_s / 4.0 : phase.eps_s;
      sub.delta = phase.delta_s;
      sub.score_play_cap = cfg.score_play_cap;
      SubroutineReport subrep = pac_best_item(oracle, A, all, sub);
      int pivot = subrep.returned_item;
      phase.pivot = pivot;
      phase.subroutine_plays = subrep.total_plays;

      if (cfg.eps > 0.0 && phase.eps_s <= cfg.eps) {
        trace.phases.push_back(std::move(phase));
        return finish(pivot, oracle, std::move(trace), true);
      }

      std::vector<int> rest;
      for (int i : A)
        if (i != pivot) rest.push_back(i);
      ScoreEstimate est = score_estimate(oracle, rest, pivot, phase.delta_s,
                                         cfg.score_play_cap);
      double theta_hat = clamp_theta_hat(est.ratio);
      phase.theta_hat.push_back(theta_hat);
      long long t = (long long)std::ceil(
          2.0 * theta_hat / (cfg.m * phase.eps_s * phase.eps_s) *
          std::log(cfg.k / phase.delta_s));
      phase.t_s.push_back(t);

      oracle.play_batch(played, cfg.m, t, w);
      std::vector<int> next;
      for (int i : A) {
        if (i != pivot && w.empirical_prob(i, pivot) < 0.5 - phase.eps_s)
          phase.eliminated.push_back(i);
        else
          next.push_back(i);
      }
      A = std::move(next);
      trace.phases.push_back(std::move(phase));
      ++s;
    }
    return finish(A.front(), oracle, std::move(trace), true);
  } catch (const BudgetExhausted&) {
    RunReport partial =
        finish(A.empty() ? -1 : A.front(), oracle, std::move(trace), false);
    throw WrapperBudgetError("play budget exhausted mid-run",
                             std::move(partial));
  }
}

std::vector<long long> survival_profile(const RunReport& report) {
  return report.item_plays;
}

std::string WrapperTrace::to_csv() const {
  std::ostringstream os;
  os << "s,endgame,eps_s,delta_s,pivot,surviving,batches,total_t,"
        "subroutine_plays,eliminated\n";
  for (const auto& p : phases) {
    long long tt = std::accumulate(p.t_s.begin(), p.t_s.end(), 0LL);
    os << p.s << ',' << (p.endgame ? 1 : 0) << ',' << p.eps_s << ','
       << p.delta_s << ',' << p.pivot << ',' << p.surviving_before.size()
       << ',' << p.t_s.size() << ',' << tt << ',' << p.subroutine_plays << ',';
    for (size_t i = 0; i < p.eliminated.size(); ++i)
      os << (i ? ";" : "") << p.eliminated[i];
    os << '\n';
  }
  return os.str();
}

std::string run_report_csv(const RunReport& report) {
  std::ostringstream os;
  os << "returned_item,total_plays,completed\n"
     << report.returned_item << ',' << report.total_plays << ','
     << (report.completed ? 1 : 0) << '\n';
  os << "item,plays\n";
  for (size_t i = 0; i < report.item_plays.size(); ++i)
    os << i << ',' << report.item_plays[i] << '\n';
  return os.str();
}

}  // namespace plb
