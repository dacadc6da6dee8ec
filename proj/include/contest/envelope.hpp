#pragma once

#include <span>
#include <utility>
#include <vector>

namespace contest {

struct EnvelopePoint {
  double w;
  double v;
};

// Smallest concave majorant of a finite point set, affine between hull
// vertices. Evaluation outside [w_min, w_max] clamps to the end values.
class ConcaveEnvelope {
 public:
  static ConcaveEnvelope of_points(std::span<const EnvelopePoint> points);

  double operator()(double w) const;
  // Hull vertices bracketing w (equal when w hits a vertex exactly).
  std::pair<EnvelopePoint, EnvelopePoint> chord_at(double w) const;
  const std::vector<EnvelopePoint>& vertices() const { return vertices_; }

 private:
  std::vector<EnvelopePoint> vertices_;
};

}  // namespace contest
