#include "contest/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "contest/errors.hpp"
#include "contest/numerics.hpp"

namespace contest {

namespace {

constexpr double kMassTol = 1e-12;

double start_of(const StoppingDistribution::Component& c) {
  if (std::holds_alternative<StoppingDistribution::Atom>(c))
    return std::get<StoppingDistribution::Atom>(c).x;
  return std::get<StoppingDistribution::Segment>(c).x_lo;
}

double end_of(const StoppingDistribution::Component& c) {
  if (std::holds_alternative<StoppingDistribution::Atom>(c))
    return std::get<StoppingDistribution::Atom>(c).x;
  return std::get<StoppingDistribution::Segment>(c).x_hi;
}

double mass_of(const StoppingDistribution::Component& c) {
  if (std::holds_alternative<StoppingDistribution::Atom>(c))
    return std::get<StoppingDistribution::Atom>(c).mass;
  return std::get<StoppingDistribution::Segment>(c).mass;
}

// Normalized position t(x) in [0,1] within a segment.
double segment_t(const StoppingDistribution::Segment& s, double x) {
  using Profile = StoppingDistribution::Segment::Profile;
  if (x <= s.x_lo) return 0.0;
  if (x >= s.x_hi) return 1.0;
  switch (s.profile) {
    case Profile::linear_x:
      return (x - s.x_lo) / (s.x_hi - s.x_lo);
    case Profile::linear_h:
      return (scale_h(s.params, x) - s.w_lo) / (s.w_hi - s.w_lo);
    case Profile::grid: {
      auto it = std::upper_bound(s.knots_x.begin(), s.knots_x.end(), x);
      std::size_t hi = static_cast<std::size_t>(it - s.knots_x.begin());
      std::size_t lo = hi - 1;
      double span = s.knots_x[hi] - s.knots_x[lo];
      double f = span > 0.0 ? (x - s.knots_x[lo]) / span : 1.0;
      return s.knots_t[lo] + f * (s.knots_t[hi] - s.knots_t[lo]);
    }
    case Profile::mapped:
      return std::clamp(s.map_cdf_t(x), 0.0, 1.0);
  }
  return 0.0;
}

double segment_quantile(const StoppingDistribution::Segment& s, double t) {
  using Profile = StoppingDistribution::Segment::Profile;
  t = std::clamp(t, 0.0, 1.0);
  if (t == 0.0) return s.x_lo;
  if (t == 1.0) return s.x_hi;
  switch (s.profile) {
    case Profile::linear_x:
      return s.x_lo + t * (s.x_hi - s.x_lo);
    case Profile::linear_h:
      return scale_h_inverse(s.params, s.w_lo + t * (s.w_hi - s.w_lo));
    case Profile::grid: {
      auto it = std::upper_bound(s.knots_t.begin(), s.knots_t.end(), t);
      std::size_t hi = static_cast<std::size_t>(it - s.knots_t.begin());
      if (hi >= s.knots_t.size()) hi = s.knots_t.size() - 1;
      std::size_t lo = hi - 1;
      // Skip flat t-runs so the left-continuous inverse lands at their start.
      double span = s.knots_t[hi] - s.knots_t[lo];
      double f = span > 0.0 ? (t - s.knots_t[lo]) / span : 0.0;
      return s.knots_x[lo] + f * (s.knots_x[hi] - s.knots_x[lo]);
    }
    case Profile::mapped:
      return std::clamp(s.map_quantile_t(t), s.x_lo, s.x_hi);
  }
  return s.x_lo;
}

// ∫ h dF over the t-slice [t0, t1] of a segment, in absolute mass units.
double segment_h_integral(const StoppingDistribution::Segment& s,
                          const ModelParams& p, double t0, double t1) {
  using Profile = StoppingDistribution::Segment::Profile;
  t0 = std::clamp(t0, 0.0, 1.0);
  t1 = std::clamp(t1, 0.0, 1.0);
  if (t1 <= t0) return 0.0;
  switch (s.profile) {
    case Profile::linear_x: {
      double a = segment_quantile(s, t0);
      double b = segment_quantile(s, t1);
      double density = s.mass / (s.x_hi - s.x_lo);
      return density * scale_h_integral(p, a, b);
    }
    case Profile::linear_h: {
      if (s.params == p) {
        double wa = s.w_lo + t0 * (s.w_hi - s.w_lo);
        double wb = s.w_lo + t1 * (s.w_hi - s.w_lo);
        double slope = s.mass / (s.w_hi - s.w_lo);
        return slope * 0.5 * (wb * wb - wa * wa);
      }
      break;  // evaluated under foreign params: quadrature fallback
    }
    case Profile::grid: {
      double a = segment_quantile(s, t0);
      double b = segment_quantile(s, t1);
      KahanSum acc;
      for (std::size_t i = 0; i + 1 < s.knots_x.size(); ++i) {
        double xa = std::max(a, s.knots_x[i]);
        double xb = std::min(b, s.knots_x[i + 1]);
        if (xa >= xb) continue;
        double span = s.knots_x[i + 1] - s.knots_x[i];
        double cell_mass = s.mass * (s.knots_t[i + 1] - s.knots_t[i]);
        if (span <= 0.0 || cell_mass <= 0.0) continue;
        acc.add(cell_mass / span * scale_h_integral(p, xa, xb));
      }
      return acc.value();
    }
    case Profile::mapped:
      if (s.map_h_integral && s.params == p) return s.map_h_integral(t0, t1);
      break;
  }
  // Generic fallback: ∫ h(quantile(t)) dt over [t0, t1].
  return s.mass * gauss_legendre(
                      [&](double t) {
                        return scale_h(p, segment_quantile(s, t));
                      },
                      t0, t1, 128);
}

}  // namespace

StoppingDistribution::StoppingDistribution(std::vector<Component> components)
    : components_(std::move(components)) {
  std::stable_sort(components_.begin(), components_.end(),
                   [](const Component& a, const Component& b) {
                     if (start_of(a) != start_of(b))
                       return start_of(a) < start_of(b);
                     // Atom before a segment starting at the same point.
                     return std::holds_alternative<Atom>(a) &&
                            !std::holds_alternative<Atom>(b);
                   });
  validate();
  base_.resize(components_.size());
  KahanSum cum;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    base_[i] = cum.value();
    cum.add(mass_of(components_[i]));
  }
}

void StoppingDistribution::validate() const {
  require(!components_.empty(), errc::invalid_distribution, "no components");
  KahanSum total;
  double prev_end = -1.0;
  for (const auto& c : components_) {
    double m = mass_of(c);
    require(std::isfinite(m) && m > 0.0, errc::invalid_distribution,
            "component mass must be positive");
    require(std::isfinite(start_of(c)) && start_of(c) >= 0.0,
            errc::invalid_distribution, "support must lie in [0, inf)");
    require(start_of(c) >= prev_end, errc::invalid_distribution,
            "components must not overlap");
    if (const auto* s = std::get_if<Segment>(&c)) {
      require(s->x_lo < s->x_hi, errc::invalid_distribution, "empty segment");
      if (s->profile == Segment::Profile::grid) {
        require(s->knots_x.size() >= 2 &&
                    s->knots_x.size() == s->knots_t.size(),
                errc::invalid_distribution, "bad grid knots");
        require(s->knots_t.front() == 0.0 && s->knots_t.back() == 1.0,
                errc::invalid_distribution, "grid t must span [0,1]");
        for (std::size_t i = 1; i < s->knots_x.size(); ++i) {
          require(s->knots_x[i] > s->knots_x[i - 1],
                  errc::invalid_distribution, "grid x must increase");
          require(s->knots_t[i] >= s->knots_t[i - 1],
                  errc::invalid_distribution, "grid t must not decrease");
        }
        require(s->knots_x.front() == s->x_lo && s->knots_x.back() == s->x_hi,
                errc::invalid_distribution, "grid knots must span the segment");
      }
      if (s->profile == Segment::Profile::mapped) {
        require(static_cast<bool>(s->map_cdf_t) &&
                    static_cast<bool>(s->map_quantile_t),
                errc::invalid_distribution, "mapped segment needs callables");
        // Coarse monotonicity and inverse-consistency probe.
        double prev = -1.0;
        for (int i = 0; i <= 8; ++i) {
          double t = i / 8.0;
          double x = segment_quantile(*s, t);
          require(x >= s->x_lo - 1e-9 && x <= s->x_hi + 1e-9,
                  errc::invalid_distribution, "mapped quantile out of range");
          require(x >= prev, errc::invalid_distribution,
                  "mapped quantile must be monotone");
          prev = x;
        }
      }
      if (s->profile == Segment::Profile::linear_h)
        require(s->w_lo < s->w_hi, errc::invalid_distribution,
                "linear_h needs increasing w range");
    }
    prev_end = end_of(c);
    total.add(m);
  }
  require(std::fabs(total.value() - 1.0) <= kMassTol,
          errc::invalid_distribution, "total mass must be 1");
}

StoppingDistribution::Builder& StoppingDistribution::Builder::atom(
    double x, double mass) {
  components_.push_back(Atom{x, mass});
  return *this;
}

StoppingDistribution::Builder& StoppingDistribution::Builder::uniform_segment(
    double x_lo, double x_hi, double mass) {
  Segment s;
  s.profile = Segment::Profile::linear_x;
  s.x_lo = x_lo;
  s.x_hi = x_hi;
  s.mass = mass;
  components_.push_back(std::move(s));
  return *this;
}

StoppingDistribution::Builder& StoppingDistribution::Builder::scale_segment(
    const ModelParams& params, double x_lo, double x_hi, double mass) {
  Segment s;
  s.profile = Segment::Profile::linear_h;
  s.params = params;
  s.x_lo = x_lo;
  s.x_hi = x_hi;
  s.mass = mass;
  s.w_lo = scale_h(params, x_lo);
  s.w_hi = scale_h(params, x_hi);
  components_.push_back(std::move(s));
  return *this;
}

StoppingDistribution::Builder& StoppingDistribution::Builder::grid_segment(
    std::vector<double> xs, std::vector<double> ts, double mass) {
  Segment s;
  s.profile = Segment::Profile::grid;
  require(!xs.empty(), errc::invalid_distribution, "grid_segment: no knots");
  s.x_lo = xs.front();
  s.x_hi = xs.back();
  s.mass = mass;
  s.knots_x = std::move(xs);
  s.knots_t = std::move(ts);
  components_.push_back(std::move(s));
  return *this;
}

StoppingDistribution::Builder& StoppingDistribution::Builder::mapped_segment(
    double x_lo, double x_hi, double mass,
    std::function<double(double)> cdf_t, std::function<double(double)> quantile_t,
    std::function<double(double, double)> h_integral,
    const ModelParams& params) {
  Segment s;
  s.profile = Segment::Profile::mapped;
  s.x_lo = x_lo;
  s.x_hi = x_hi;
  s.mass = mass;
  s.params = params;
  s.map_cdf_t = std::move(cdf_t);
  s.map_quantile_t = std::move(quantile_t);
  s.map_h_integral = std::move(h_integral);
  components_.push_back(std::move(s));
  return *this;
}

StoppingDistribution::Builder& StoppingDistribution::Builder::component(
    Component c) {
  components_.push_back(std::move(c));
  return *this;
}

StoppingDistribution StoppingDistribution::Builder::build() && {
  return StoppingDistribution(std::move(components_));
}

StoppingDistribution StoppingDistribution::point_mass(double x) {
  return Builder().atom(x, 1.0).build();
}

StoppingDistribution StoppingDistribution::two_point(double x_lo,
                                                     double mass_lo,
                                                     double x_hi) {
  return Builder().atom(x_lo, mass_lo).atom(x_hi, 1.0 - mass_lo).build();
}

StoppingDistribution StoppingDistribution::from_atoms(std::vector<Atom> atoms) {
  Builder b;
  for (const auto& a : atoms) b.atom(a.x, a.mass);
  return std::move(b).build();
}

StoppingDistribution StoppingDistribution::uniform(double x_lo, double x_hi) {
  return Builder().uniform_segment(x_lo, x_hi, 1.0).build();
}

StoppingDistribution StoppingDistribution::from_cdf_grid(
    const std::function<double(double)>& cdf, double x_lo, double x_hi,
    int points) {
  require(points >= 8, errc::domain, "from_cdf_grid: too few points");
  // Knots clustered toward both endpoints (sin^2 warp of a uniform grid);
  // equilibrium cdfs steepen near the support ends.
  std::vector<double> xs(points), ts(points);
  const double pi = 3.14159265358979323846;
  double f_lo = cdf(x_lo);
  double f_hi = cdf(x_hi);
  require(f_hi > f_lo, errc::invalid_distribution, "from_cdf_grid: flat cdf");
  for (int i = 0; i < points; ++i) {
    double u = static_cast<double>(i) / (points - 1);
    double warped = 0.5 * (1.0 - std::cos(pi * u));
    xs[i] = x_lo + warped * (x_hi - x_lo);
    double f = std::clamp((cdf(xs[i]) - f_lo) / (f_hi - f_lo), 0.0, 1.0);
    ts[i] = f;
  }
  ts.front() = 0.0;
  ts.back() = 1.0;
  for (int i = 1; i < points; ++i) ts[i] = std::max(ts[i], ts[i - 1]);
  Builder b;
  if (f_lo > 0.0) b.atom(x_lo, f_lo);
  b.grid_segment(std::move(xs), std::move(ts), f_hi - f_lo);
  if (f_hi < 1.0) b.atom(x_hi + 0.0, 1.0 - f_hi);
  return std::move(b).build();
}

double StoppingDistribution::cdf(double x) const {
  if (!std::isfinite(x)) return x > 0 ? 1.0 : 0.0;
  double y = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const Component& c = components_[i];
    if (start_of(c) > x) break;
    if (const auto* a = std::get_if<Atom>(&c)) {
      y = base_[i] + (x >= a->x ? a->mass : 0.0);
    } else {
      const auto& s = std::get<Segment>(c);
      y = base_[i] + s.mass * segment_t(s, x);
    }
  }
  return y;
}

double StoppingDistribution::cdf_left(double x) const {
  double y = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const Component& c = components_[i];
    if (start_of(c) >= x) {
      // An atom exactly at x contributes nothing to F(x-).
      if (start_of(c) > x || std::holds_alternative<Atom>(c)) break;
    }
    if (const auto* a = std::get_if<Atom>(&c)) {
      y = base_[i] + (x > a->x ? a->mass : 0.0);
    } else {
      const auto& s = std::get<Segment>(c);
      y = base_[i] + s.mass * segment_t(s, x);  // segments are continuous
    }
  }
  return y;
}

double StoppingDistribution::quantile(double y) const {
  require(y >= 0.0 && y <= 1.0, errc::domain, "quantile: y outside [0,1]");
  if (y <= 0.0) return support_min();
  // Component with base < y <= base + mass; cumulative levels are
  // contiguous, so use the next base as the upper level.
  for (std::size_t i = 0; i < components_.size(); ++i) {
    double hi = i + 1 < components_.size() ? base_[i + 1] : 1.0;
    if (y <= hi && y > base_[i]) {
      if (const auto* a = std::get_if<Atom>(&components_[i])) return a->x;
      const auto& s = std::get<Segment>(components_[i]);
      return segment_quantile(s, (y - base_[i]) / s.mass);
    }
  }
  return support_max();
}

double StoppingDistribution::quantile_right(double y) const {
  require(y >= 0.0 && y <= 1.0, errc::domain,
          "quantile_right: y outside [0,1]");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    double hi = i + 1 < components_.size() ? base_[i + 1] : 1.0;
    if (hi > y) {
      if (const auto* a = std::get_if<Atom>(&components_[i])) return a->x;
      const auto& s = std::get<Segment>(components_[i]);
      return segment_quantile(s, std::max(0.0, y - base_[i]) / s.mass);
    }
  }
  return support_max();
}

double StoppingDistribution::sample(std::mt19937_64& rng) const {
  return quantile_right(uniform01(rng));
}

double StoppingDistribution::support_min() const {
  return start_of(components_.front());
}

double StoppingDistribution::support_max() const {
  double m = 0.0;
  for (const auto& c : components_) m = std::max(m, end_of(c));
  return m;
}

std::vector<StoppingDistribution::Atom> StoppingDistribution::atoms() const {
  std::vector<Atom> out;
  for (const auto& c : components_)
    if (const auto* a = std::get_if<Atom>(&c)) out.push_back(*a);
  return out;
}

double StoppingDistribution::mass_interval(double lo, double hi,
                                           bool include_lo,
                                           bool include_hi) const {
  if (hi < lo) return 0.0;
  KahanSum acc;
  for (const auto& c : components_) {
    if (const auto* a = std::get_if<Atom>(&c)) {
      bool in = (a->x > lo || (include_lo && a->x == lo)) &&
                (a->x < hi || (include_hi && a->x == hi));
      if (in) acc.add(a->mass);
    } else {
      const auto& s = std::get<Segment>(c);
      double t0 = segment_t(s, std::max(lo, s.x_lo));
      double t1 = segment_t(s, std::min(hi, s.x_hi));
      if (t1 > t0) acc.add(s.mass * (t1 - t0));
    }
  }
  return acc.value();
}

double StoppingDistribution::h_integral_interval(const ModelParams& p,
                                                 double lo, double hi,
                                                 bool include_lo,
                                                 bool include_hi) const {
  if (hi < lo) return 0.0;
  KahanSum acc;
  for (const auto& c : components_) {
    if (const auto* a = std::get_if<Atom>(&c)) {
      bool in = (a->x > lo || (include_lo && a->x == lo)) &&
                (a->x < hi || (include_hi && a->x == hi));
      if (in) acc.add(a->mass * scale_h(p, a->x));
    } else {
      const auto& s = std::get<Segment>(c);
      double t0 = segment_t(s, std::max(lo, s.x_lo));
      double t1 = segment_t(s, std::min(hi, s.x_hi));
      if (t1 > t0) acc.add(segment_h_integral(s, p, t0, t1));
    }
  }
  double v = acc.value();
  require(std::isfinite(v), errc::divergent_integral,
          "h integral is not finite");
  return v;
}

double integrate_h(const StoppingDistribution& dist, const ModelParams& p) {
  double v = dist.h_integral_interval(p, 0.0, dist.support_max(), true, true);
  require(std::isfinite(v), errc::divergent_integral,
          "integrate_h: divergent");
  return v;
}

const char* feasibility_name(Feasibility f) noexcept {
  switch (f) {
    case Feasibility::equality: return "feasible-equality";
    case Feasibility::inequality: return "feasible-inequality";
    case Feasibility::infeasible: return "infeasible";
  }
  return "unknown";
}

Feasibility is_feasible(const StoppingDistribution& dist, const ModelParams& p,
                        double tol) {
  double v = integrate_h(dist, p);
  if (std::fabs(v - 1.0) <= tol) return Feasibility::equality;
  if (p.mu <= 0.0 && v < 1.0) return Feasibility::inequality;
  return Feasibility::infeasible;
}

}  // namespace contest
