#pragma once

#include <span>

#include "contest/reward.hpp"

namespace contest {

// Absorbed drifted Brownian motion X_t = x0 + mu t + sigma W_t.
struct ModelParams {
  double x0 = 1.0;
  double mu = 0.0;
  double sigma = 1.0;

  void validate() const;
  bool operator==(const ModelParams&) const = default;
};

// Scale function normalized to h(x0) = 1, h(0) = 0. Evaluated through
// expm1 so the mu -> 0 limit is smooth; the formula as usually written
// cancels catastrophically near mu = 0.
double scale_h(const ModelParams& p, double x);

// Inverse of scale_h on [0, h(inf)).
double scale_h_inverse(const ModelParams& p, double w);

// sup h = h(inf): finite iff mu > 0.
double scale_h_sup(const ModelParams& p);

// Exact antiderivative difference: integral of h(x) dx over [a, b].
double scale_h_integral(const ModelParams& p, double a, double b);

// Drift thresholds below which the equilibrium exists.
double mu_bar_infinity(const ModelParams& p, const RewardFunction& reward);
double mu_bar_n(const ModelParams& p, std::span<const double> rewards);

}  // namespace contest
