#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace contest {

// Compensated (Kahan) accumulator for long sums of mixed-magnitude terms.
class KahanSum {
 public:
  void add(double v) {
    double y = v - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// log(exp(a) + exp(b)), safe for -inf arguments.
double log_sum_exp(double a, double b);

double log_factorial(long n);
double log_binomial(long n, long k);
// log of the trinomial coefficient n! / (i! j! k!) with i+j+k = n.
double log_trinomial(long n, long i, long j, long k);

double normal_cdf(double z);

// Fixed-order Gauss-Legendre quadrature of f on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int order = 64);

// SplitMix64 step; used to derive independent substream seeds so that
// chunked Monte Carlo aggregates are identical regardless of how the
// chunks are scheduled.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream);

// Uniform(0,1) and standard normal draws built on the raw 64-bit stream,
// so results do not depend on the standard library's distribution
// implementations.
double uniform01(std::mt19937_64& rng);
double standard_normal(std::mt19937_64& rng);

// Shortest decimal round-trip style formatting with 17 significant digits.
std::string format_sig17(double v);

struct MeanAccumulator {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  void add(double v) {
    ++count;
    double d = v - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (v - mean);
  }
  double variance() const { return count > 1 ? m2 / (count - 1) : 0.0; }
  double std_error() const;
};

// Point estimate with a 95% normal confidence half-width.
struct McEstimate {
  double mean = 0.0;
  double ci95 = 0.0;
  long rounds = 0;
};

}  // namespace contest
