#include "contest/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>

#include "contest/errors.hpp"

namespace contest {

double log_sum_exp(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

double log_factorial(long n) {
  require(n >= 0, errc::domain, "log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(long n, long k) {
  require(n >= 0 && k >= 0 && k <= n, errc::domain, "log_binomial domain");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_trinomial(long n, long i, long j, long k) {
  require(i >= 0 && j >= 0 && k >= 0 && i + j + k == n, errc::domain,
          "log_trinomial domain");
  return log_factorial(n) - log_factorial(i) - log_factorial(j) -
         log_factorial(k);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

struct GlRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Legendre roots by Newton iteration on the recurrence-evaluated polynomial.
GlRule make_rule(int n) {
  GlRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GlRule& rule_for(int order) {
  static std::mutex mtx;
  static std::map<int, GlRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int order) {
  require(order >= 2, errc::domain, "gauss_legendre: order too small");
  if (a == b) return 0.0;
  const GlRule& rule = rule_for(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  KahanSum sum;
  for (int i = 0; i < order; ++i)
    sum.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
  return half * sum.value();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  // Marsaglia polar method; second value intentionally discarded to keep
  // the draw count per call fixed at "until accepted".
  for (;;) {
    double u = 2.0 * uniform01(rng) - 1.0;
    double v = 2.0 * uniform01(rng) - 1.0;
    double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

std::string format_sig17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double MeanAccumulator::std_error() const {
  if (count < 2) return std::numeric_limits<double>::infinity();
  return std::sqrt(variance() / static_cast<double>(count));
}

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::domain: return "domain";
    case errc::invalid_reward: return "invalid_reward";
    case errc::last_rank_discontinuity: return "last_rank_discontinuity";
    case errc::constant_reward: return "constant_reward";
    case errc::invalid_distribution: return "invalid_distribution";
    case errc::drift_too_large: return "drift_too_large";
    case errc::infeasible_target: return "infeasible_target";
    case errc::divergent_integral: return "divergent_integral";
    case errc::out_of_range: return "out_of_range";
    case errc::exact_mode_cap: return "exact_mode_cap";
    case errc::no_jump: return "no_jump";
    case errc::bracket_violated: return "bracket_violated";
    case errc::unsupported: return "unsupported";
    case errc::bad_config: return "bad_config";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace contest
