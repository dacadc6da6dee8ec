#include "contest/scale.hpp"

#include <cmath>
#include <limits>

#include "contest/errors.hpp"
#include "contest/numerics.hpp"

namespace contest {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 2 mu / sigma^2; h(x) = expm1(-c x) / expm1(-c x0) when c != 0.
double drift_rate(const ModelParams& p) {
  return 2.0 * p.mu / (p.sigma * p.sigma);
}

bool linear_branch(const ModelParams& p) {
  if (p.mu == 0.0) return true;
  // Guard against expm1 underflowing to zero for denormal drift.
  return std::expm1(-drift_rate(p) * p.x0) == 0.0;
}

}  // namespace

void ModelParams::validate() const {
  require(std::isfinite(x0) && std::isfinite(mu) && std::isfinite(sigma),
          errc::domain, "params must be finite");
  require(x0 > 0.0, errc::domain, "x0 must be positive");
  require(sigma > 0.0, errc::domain, "sigma must be positive");
}

double scale_h(const ModelParams& p, double x) {
  p.validate();
  require(x >= 0.0, errc::domain, "scale_h: x must be nonnegative");
  if (linear_branch(p)) return x / p.x0;
  const double c = drift_rate(p);
  return std::expm1(-c * x) / std::expm1(-c * p.x0);
}

double scale_h_sup(const ModelParams& p) {
  p.validate();
  if (p.mu <= 0.0) return kInf;
  const double c = drift_rate(p);
  return -1.0 / std::expm1(-c * p.x0);
}

double scale_h_inverse(const ModelParams& p, double w) {
  p.validate();
  require(w >= 0.0, errc::domain, "scale_h_inverse: w must be nonnegative");
  require(w < scale_h_sup(p), errc::out_of_range,
          "scale_h_inverse: w >= h(inf) for positive drift");
  if (linear_branch(p)) return w * p.x0;
  const double c = drift_rate(p);
  return -std::log1p(w * std::expm1(-c * p.x0)) / c;
}

double scale_h_integral(const ModelParams& p, double a, double b) {
  p.validate();
  require(a >= 0.0 && b >= a, errc::domain, "scale_h_integral: bad interval");
  if (linear_branch(p)) return (b * b - a * a) / (2.0 * p.x0);
  const double c = drift_rate(p);
  const double denom = std::expm1(-c * p.x0);
  auto anti = [&](double x) { return (-std::exp(-c * x) / c - x) / denom; };
  return anti(b) - anti(a);
}

double mu_bar_infinity(const ModelParams& p, const RewardFunction& reward) {
  p.validate();
  const double top = reward.r0();
  const double bottom = reward.r1();
  const double mean = reward.mean();
  require(top > bottom, errc::constant_reward, "mu_bar: constant reward");
  return p.sigma * p.sigma / (2.0 * p.x0) *
         std::log((top - bottom) / (top - mean));
}

double mu_bar_n(const ModelParams& p, std::span<const double> rewards) {
  p.validate();
  require(rewards.size() >= 2, errc::domain, "mu_bar_n: need n >= 2");
  KahanSum sum;
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    require(i == 0 || rewards[i] <= rewards[i - 1], errc::invalid_reward,
            "mu_bar_n: rewards must be decreasing");
    sum.add(rewards[i]);
  }
  const double top = rewards.front();
  const double bottom = rewards.back();
  require(top > bottom, errc::constant_reward, "mu_bar_n: constant rewards");
  const double mean = sum.value() / static_cast<double>(rewards.size());
  return p.sigma * p.sigma / (2.0 * p.x0) *
         std::log((top - bottom) / (top - mean));
}

}  // namespace contest
