#pragma once
#include "plbandits/pl_instance.hpp"

namespace plb {

// Closed-form predictors for the instance-dependent complexity expressions;
// asymptotic constants are unknown, so these are plotting overlays, not
// achieved-constant assertions.
struct ComplexityTerms {
  double ub_pac = 0.0;        // fixed-confidence upper bound expression
  double lb_winner = 0.0;     // winner-feedback lower bound
  double lb_topm = 0.0;       // top-m lower bound
  double delta_tilde = 0.0;   // fixed-budget hardness parameter
  double ua_success_lb = 0.0; // guaranteed success probability at budget Q
};

// (Theta_[k]/k) sum_{i != best} max(1, 1/(m max(Delta_i,eps)^2))
//              * ln(k/delta) * max(ln(1/max(Delta_i,eps)), 0).
double pac_upper_bound(const PLInstance& inst, int k, int m, double eps,
                       double delta);

// max(sum_{i != best} theta_i theta_best / Delta_i^2, n/k) * ln(1/delta).
double winner_lower_bound(const PLInstance& inst, int k, double delta);

// Instance term divided by m; n/k term unchanged.
double topm_lower_bound(const PLInstance& inst, int k, int m, double delta);

// (sum_{a != best} theta_a^2 / Delta_a^2)^{-1}; 0 when any gap vanishes.
double delta_tilde(const PLInstance& inst);

// exp(-2 m Q delta_tilde); equals 1 when delta_tilde = 0 or Q = 0.
double budget_error_bound(const PLInstance& inst, long long Q, int m);

// 1 - 4 log2(n) ((k-1)/k) exp(-m Q Delta_min^2 / (16(2n + k log2 k))),
// clamped to [0,1].
double ua_success_bound(const PLInstance& inst, int n, int k, int m,
                        long long Q);

ComplexityTerms compute_complexity_terms(const PLInstance& inst, int k, int m,
                                         double eps, double delta,
                                         long long Q);

}  // namespace plb
