#include "contest/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "contest/errors.hpp"

namespace contest {

ConcaveEnvelope ConcaveEnvelope::of_points(
    std::span<const EnvelopePoint> points) {
  require(points.size() >= 2, errc::domain, "envelope: need >= 2 points");
  std::vector<EnvelopePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.w != b.w ? a.w < b.w : a.v < b.v;
  });
  // Collapse duplicate abscissae to their largest value.
  std::vector<EnvelopePoint> unique;
  for (const auto& p : pts) {
    require(std::isfinite(p.w) && std::isfinite(p.v), errc::domain,
            "envelope: non-finite point");
    if (!unique.empty() && unique.back().w == p.w)
      unique.back().v = p.v;  // sorted so p.v is the larger
    else
      unique.push_back(p);
  }
  require(unique.size() >= 2, errc::domain,
          "envelope: need >= 2 distinct abscissae");

  // Upper hull by monotone chain: drop the middle point whenever it lies
  // on or below the chord of its neighbours.
  ConcaveEnvelope env;
  auto& hull = env.vertices_;
  for (const auto& p : unique) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      double cross = (b.w - a.w) * (p.v - a.v) - (p.w - a.w) * (b.v - a.v);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return env;
}

double ConcaveEnvelope::operator()(double w) const {
  auto [a, b] = chord_at(w);
  if (a.w == b.w) return a.v;
  double t = (w - a.w) / (b.w - a.w);
  return a.v + t * (b.v - a.v);
}

std::pair<EnvelopePoint, EnvelopePoint> ConcaveEnvelope::chord_at(
    double w) const {
  if (w <= vertices_.front().w)
    return {vertices_.front(), vertices_.front()};
  if (w >= vertices_.back().w) return {vertices_.back(), vertices_.back()};
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), w,
      [](const EnvelopePoint& p, double val) { return p.w < val; });
  if (it->w == w) return {*it, *it};
  return {*(it - 1), *it};
}

}  // namespace contest
