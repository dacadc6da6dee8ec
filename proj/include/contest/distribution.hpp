#pragma once

#include <functional>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "contest/scale.hpp"

namespace contest {

// Law of a stopped value on [0, inf): point masses plus continuous,
// strictly increasing cdf stretches. Immutable after construction; all
// accessors are safe for concurrent reads.
class StoppingDistribution {
 public:
  struct Atom {
    double x;
    double mass;
  };

  // One continuous stretch of the cdf over [x_lo, x_hi] carrying `mass`.
  // The shape is expressed through the normalized position t in [0,1]:
  // cdf contribution at x is mass * t(x).
  struct Segment {
    enum class Profile { linear_x, linear_h, grid, mapped };
    Profile profile = Profile::linear_x;
    double x_lo = 0.0;
    double x_hi = 0.0;
    double mass = 0.0;

    // linear_h: t is affine in h(x) computed under `params`.
    ModelParams params{};
    double w_lo = 0.0;
    double w_hi = 0.0;

    // grid: piecewise-linear t between knots; knots_t spans [0,1].
    std::vector<double> knots_x;
    std::vector<double> knots_t;

    // mapped: closed-form monotone transform supplied by the builder.
    std::function<double(double)> map_cdf_t;       // x -> t
    std::function<double(double)> map_quantile_t;  // t -> x
    // Optional exact ∫ h dF over a t-slice, in absolute mass units.
    std::function<double(double, double)> map_h_integral;
  };

  using Component = std::variant<Atom, Segment>;

  class Builder {
   public:
    Builder& atom(double x, double mass);
    Builder& uniform_segment(double x_lo, double x_hi, double mass);
    // t affine in the scale function h: the mean-field equilibrium shape.
    Builder& scale_segment(const ModelParams& params, double x_lo, double x_hi,
                           double mass);
    Builder& grid_segment(std::vector<double> xs, std::vector<double> ts,
                          double mass);
    Builder& mapped_segment(double x_lo, double x_hi, double mass,
                            std::function<double(double)> cdf_t,
                            std::function<double(double)> quantile_t,
                            std::function<double(double, double)> h_integral,
                            const ModelParams& params);
    Builder& component(Component c);
    StoppingDistribution build() &&;

   private:
    std::vector<Component> components_;
  };

  static StoppingDistribution point_mass(double x);
  static StoppingDistribution two_point(double x_lo, double mass_lo,
                                        double x_hi);
  static StoppingDistribution from_atoms(std::vector<Atom> atoms);
  static StoppingDistribution uniform(double x_lo, double x_hi);
  // Dense monotone grid of a cdf given as a callable; knots are clustered
  // toward both support endpoints.
  static StoppingDistribution from_cdf_grid(
      const std::function<double(double)>& cdf, double x_lo, double x_hi,
      int points = 4096);

  double cdf(double x) const;
  double cdf_left(double x) const;  // F(x-)
  // Left-continuous inverse F^{-1}(y) = inf{x: F(x) >= y}.
  double quantile(double y) const;
  // Right-continuous inverse F_+^{-1}(y) = inf{x: F(x) > y}.
  double quantile_right(double y) const;

  double sample(std::mt19937_64& rng) const;

  double support_min() const;
  double support_max() const;

  double mass_interval(double lo, double hi, bool include_lo,
                       bool include_hi) const;
  double h_integral_interval(const ModelParams& p, double lo, double hi,
                             bool include_lo, bool include_hi) const;

  const std::vector<Component>& components() const { return components_; }
  std::vector<Atom> atoms() const;
  // cdf level immediately below component i.
  double base_level(std::size_t i) const { return base_[i]; }

 private:
  explicit StoppingDistribution(std::vector<Component> components);
  void validate() const;

  std::vector<Component> components_;  // sorted by support position
  std::vector<double> base_;           // cumulative mass before component i
};

double integrate_h(const StoppingDistribution& dist, const ModelParams& p);

enum class Feasibility { equality, inequality, infeasible };
const char* feasibility_name(Feasibility f) noexcept;

// Compares ∫ h dF against 1: equality within tol, or (for mu <= 0) any
// value below 1; anything else is not attainable by stopping.
Feasibility is_feasible(const StoppingDistribution& dist, const ModelParams& p,
                        double tol = 1e-9);

}  // namespace contest
