#include "plbandits/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plb {

double pac_upper_bound(const PLInstance& inst, int k, int m, double eps,
                       double delta) {
  if (eps == 0.0 && !inst.has_unique_best())
    throw std::invalid_argument("eps = 0 requires a unique best item");
  GapProfile g = inst.gap_profile();
  double sum = 0.0;
  for (int i = 0; i < inst.n(); ++i) {
    if (i == g.best_item) continue;
    double x = std::max(g.delta[i], eps);
    double per = std::max(1.0, 1.0 / (m * x * x));
    // The log factor is clamped below at 0 so the predictor never goes
    // negative for gaps above 1.
    double lf = std::max(std::log(1.0 / x), 0.0);
    sum += per * lf;
  }
  return inst.top_k_mass(k) / k * sum * std::log(k / delta);
}

double winner_lower_bound(const PLInstance& inst, int k, double delta) {
  GapProfile g = inst.gap_profile();
  double best_theta = inst.theta(g.best_item);
  double inst_term = 0.0;
  for (int i = 0; i < inst.n(); ++i) {
    if (i == g.best_item) continue;
    if (g.delta[i] <= 0.0)
      throw std::invalid_argument("degenerate gap in lower bound");
    inst_term += inst.theta(i) * best_theta / (g.delta[i] * g.delta[i]);
  }
  return std::max(inst_term, (double)inst.n() / k) * std::log(1.0 / delta);
}

double topm_lower_bound(const PLInstance& inst, int k, int m, double delta) {
  GapProfile g = inst.gap_profile();
  double best_theta = inst.theta(g.best_item);
  double inst_term = 0.0;
  for (int i = 0; i < inst.n(); ++i) {
    if (i == g.best_item) continue;
    if (g.delta[i] <= 0.0)
      throw std::invalid_argument("degenerate gap in lower bound");
    inst_term += inst.theta(i) * best_theta / (g.delta[i] * g.delta[i]);
  }
  return std::max(inst_term / m, (double)inst.n() / k) * std::log(1.0 / delta);
}

double delta_tilde(const PLInstance& inst) {
  GapProfile g = inst.gap_profile();
  double sum = 0.0;
  for (int i = 0; i < inst.n(); ++i) {
    if (i == g.best_item) continue;
    if (g.delta[i] <= 0.0) return 0.0;  // limiting value for tied instances
    sum += inst.theta(i) * inst.theta(i) / (g.delta[i] * g.delta[i]);
  }
  return 1.0 / sum;
}

double budget_error_bound(const PLInstance& inst, long long Q, int m) {
  if (Q < 0) throw std::invalid_argument("Q must be nonnegative");
  return std::exp(-2.0 * m * (double)Q * delta_tilde(inst));
}

double ua_success_bound(const PLInstance& inst, int n, int k, int m,
                        long long Q) {
  GapProfile g = inst.gap_profile();
  double dmin = g.delta_min;
  double expo = -(double)m * (double)Q * dmin * dmin /
                (16.0 * (2.0 * n + k * std::log2((double)k)));
  double bound =
      1.0 - 4.0 * std::log2((double)n) * ((double)(k - 1) / k) * std::exp(expo);
  return std::clamp(bound, 0.0, 1.0);
}

ComplexityTerms compute_complexity_terms(const PLInstance& inst, int k, int m,
                                         double eps, double delta,
                                         long long Q) {
  ComplexityTerms t;
  t.ub_pac = pac_upper_bound(inst, k, m, eps, delta);
  t.lb_winner = winner_lower_bound(inst, k, delta);
  t.lb_topm = topm_lower_bound(inst, k, m, delta);
  t.delta_tilde = delta_tilde(inst);
  t.ua_success_lb = ua_success_bound(inst, inst.n(), k, m, Q);
  return t;
}

}  // namespace plb
