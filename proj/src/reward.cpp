#include "contest/reward.hpp"

#include <algorithm>
#include <cmath>

#include "contest/errors.hpp"
#include "contest/numerics.hpp"

namespace contest {

namespace {

double piece_value(const RewardPiece& p, double r) {
  if (p.v_lo == p.v_hi) return p.v_lo;
  double t = (r - p.r_lo) / (p.r_hi - p.r_lo);
  return p.v_lo + t * (p.v_hi - p.v_lo);
}

double piece_integral(const RewardPiece& p, double a, double b) {
  // Exact integral of the affine piece over [a, b] within its domain.
  double va = piece_value(p, a);
  double vb = piece_value(p, b);
  return 0.5 * (va + vb) * (b - a);
}

}  // namespace

RewardFunction::RewardFunction(std::vector<RewardPiece> pieces)
    : pieces_(std::move(pieces)) {
  validate();
  KahanSum m;
  for (const auto& p : pieces_) m.add(piece_integral(p, p.r_lo, p.r_hi));
  mean_ = m.value();
}

void RewardFunction::validate() const {
  require(!pieces_.empty(), errc::invalid_reward, "no pieces");
  require(pieces_.front().r_lo == 0.0 && pieces_.back().r_hi == 1.0,
          errc::invalid_reward, "pieces must cover [0,1]");
  const RewardPiece* prev = nullptr;
  for (const auto& p : pieces_) {
    require(p.r_lo < p.r_hi, errc::invalid_reward, "empty piece");
    require(std::isfinite(p.v_lo) && std::isfinite(p.v_hi),
            errc::invalid_reward, "non-finite value");
    require(p.v_lo >= 0.0 && p.v_hi >= 0.0, errc::invalid_reward,
            "negative reward");
    require(p.v_lo >= p.v_hi, errc::invalid_reward,
            "reward must be decreasing within pieces");
    if (prev) {
      require(prev->r_hi == p.r_lo, errc::invalid_reward,
              "pieces must be contiguous");
      require(prev->v_hi >= p.v_lo, errc::invalid_reward,
              "reward must be decreasing across pieces");
    }
    prev = &p;
  }
  require(pieces_.front().v_lo > pieces_.back().v_hi, errc::constant_reward,
          "reward must be non-constant with R(0) > R(1)");
}

RewardFunction RewardFunction::step(
    const std::vector<double>& interior_breakpoints,
    const std::vector<double>& values) {
  require(values.size() == interior_breakpoints.size() + 1,
          errc::invalid_reward, "step: need one value per piece");
  std::vector<RewardPiece> pieces;
  double lo = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double hi = i < interior_breakpoints.size() ? interior_breakpoints[i] : 1.0;
    require(hi > lo && hi <= 1.0, errc::invalid_reward,
            "step: breakpoints must be increasing in (0,1)");
    pieces.push_back({lo, hi, values[i], values[i]});
    lo = hi;
  }
  require(lo == 1.0, errc::invalid_reward, "step: breakpoints exceed 1");
  return RewardFunction(std::move(pieces));
}

RewardFunction RewardFunction::piecewise_linear(
    const std::vector<std::pair<double, double>>& knots) {
  require(knots.size() >= 2, errc::invalid_reward, "pwl: need >= 2 knots");
  require(knots.front().first == 0.0 && knots.back().first == 1.0,
          errc::invalid_reward, "pwl: knots must span [0,1]");
  // A repeated r encodes a jump; the later knot is the right-continuous
  // value. A jump up at r = 1 would make R(1-) > R(1).
  std::vector<RewardPiece> pieces;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    auto [ra, va] = knots[i];
    auto [rb, vb] = knots[i + 1];
    require(rb >= ra, errc::invalid_reward, "pwl: knots must be sorted");
    if (ra == rb) {
      require(va >= vb, errc::invalid_reward, "pwl: jumps must be downward");
      if (rb == 1.0 && va > vb)
        fail(errc::last_rank_discontinuity,
             "pwl: R(1-) > R(1) is rejected (uniqueness requires "
             "left-continuity at the last rank)");
      continue;
    }
    pieces.push_back({ra, rb, va, vb});
  }
  return RewardFunction(std::move(pieces));
}

RewardFunction RewardFunction::from_pieces(std::vector<RewardPiece> pieces) {
  return RewardFunction(std::move(pieces));
}

RewardFunction RewardFunction::cutoff(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, errc::domain, "cutoff: alpha in (0,1)");
  return step({alpha}, {1.0 / alpha, 0.0});
}

RewardFunction RewardFunction::linear(double scale) {
  require(scale > 0.0, errc::domain, "linear: scale > 0");
  return piecewise_linear({{0.0, scale}, {1.0, 0.0}});
}

RewardKind RewardFunction::kind() const {
  bool all_flat = true;
  bool continuous = true;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].v_lo != pieces_[i].v_hi) all_flat = false;
    if (i > 0 && pieces_[i - 1].v_hi != pieces_[i].v_lo) continuous = false;
  }
  if (all_flat) return RewardKind::step;
  if (continuous) return RewardKind::piecewise_linear;
  return RewardKind::mixed;
}

std::size_t RewardFunction::piece_index(double r) const {
  require(r >= 0.0 && r <= 1.0, errc::domain, "rank outside [0,1]");
  if (r >= pieces_.back().r_lo) return pieces_.size() - 1;
  // Last piece with r_lo <= r.
  std::size_t lo = 0, hi = pieces_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (pieces_[mid].r_lo <= r)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

double RewardFunction::eval(double r) const {
  const RewardPiece& p = pieces_[piece_index(r)];
  if (r == 1.0) return p.v_hi;
  return piece_value(p, r);
}

double RewardFunction::eval_left(double r) const {
  require(r >= 0.0 && r <= 1.0, errc::domain, "rank outside [0,1]");
  if (r == 0.0) return pieces_.front().v_lo;
  std::size_t idx = piece_index(r);
  const RewardPiece& p = pieces_[idx];
  if (r == p.r_lo) return pieces_[idx - 1].v_hi;
  return piece_value(p, r);
}

double RewardFunction::g(double y) const {
  require(y >= 0.0 && y <= 1.0, errc::domain, "g: y outside [0,1]");
  return eval(1.0 - y);
}

double RewardFunction::g_left(double y) const { return g(y); }

double RewardFunction::g_right(double y) const {
  require(y >= 0.0 && y <= 1.0, errc::domain, "g: y outside [0,1]");
  return eval_left(1.0 - y);
}

double RewardFunction::r0() const { return pieces_.front().v_lo; }
double RewardFunction::r1() const { return pieces_.back().v_hi; }
double RewardFunction::mean() const { return mean_; }

double RewardFunction::g_inverse(double z) const {
  const double lo = r1(), hi = r0();
  const double slack = 1e-12 * std::max(1.0, hi);
  require(z >= lo - slack && z <= hi + slack, errc::out_of_range,
          "g_inverse: z outside [R(1), R(0)]");
  z = std::clamp(z, lo, hi);
  // inf{y: g(y) > z} = 1 - sup{r: R(r) > z}; R(r) > z holds on an initial
  // interval [0, s) since R is decreasing.
  double s = 0.0;
  for (const auto& p : pieces_) {
    if (p.v_lo <= z) break;
    if (p.v_hi > z) {
      s = p.r_hi;
      continue;
    }
    // Crossing inside this piece (v_lo > z >= v_hi, affine).
    s = p.r_lo + (p.v_lo - z) / (p.v_lo - p.v_hi) * (p.r_hi - p.r_lo);
    break;
  }
  return 1.0 - s;
}

double RewardFunction::integral(double r_lo, double r_hi) const {
  require(r_lo >= 0.0 && r_hi <= 1.0 && r_lo <= r_hi, errc::domain,
          "integral: bad interval");
  if (r_lo == r_hi) return 0.0;
  KahanSum acc;
  for (const auto& p : pieces_) {
    double a = std::max(r_lo, p.r_lo);
    double b = std::min(r_hi, p.r_hi);
    if (a < b) acc.add(piece_integral(p, a, b));
  }
  return acc.value();
}

double RewardFunction::integral_g(double y_lo, double y_hi) const {
  require(y_lo >= 0.0 && y_hi <= 1.0 && y_lo <= y_hi, errc::domain,
          "integral_g: bad interval");
  return integral(1.0 - y_hi, 1.0 - y_lo);
}

std::vector<double> RewardFunction::jump_set() const {
  std::vector<double> jumps;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    double r = pieces_[i].r_lo;
    if (r > 0.0 && r < 1.0 && pieces_[i - 1].v_hi > pieces_[i].v_lo)
      jumps.push_back(1.0 - r);
  }
  std::sort(jumps.begin(), jumps.end());
  return jumps;
}

std::vector<GRun> RewardFunction::g_runs() const {
  // Walk R pieces from the last rank to the first so runs come out in
  // increasing y. Merge adjacent flat pieces at equal level.
  std::vector<GRun> runs;
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    const RewardPiece& p = *it;
    GRun run{1.0 - p.r_hi, 1.0 - p.r_lo, p.v_hi, p.v_lo};
    if (!runs.empty()) {
      GRun& last = runs.back();
      bool both_flat = last.z_lo == last.z_hi && run.z_lo == run.z_hi;
      if (both_flat && last.z_hi == run.z_lo && last.y_hi == run.y_lo) {
        last.y_hi = run.y_hi;
        continue;
      }
    }
    runs.push_back(run);
  }
  return runs;
}

std::vector<FlatSegment> RewardFunction::flat_segments() const {
  std::vector<FlatSegment> flats;
  for (const GRun& run : g_runs())
    if (run.z_lo == run.z_hi)
      flats.push_back({run.z_lo, run.y_lo, run.y_hi});
  return flats;
}

RewardFunction RewardFunction::normalized() const {
  const double base = r1();
  const double scale = mean_ - base;
  require(scale > 0.0, errc::constant_reward, "normalize: constant reward");
  std::vector<RewardPiece> pieces = pieces_;
  for (auto& p : pieces) {
    p.v_lo = (p.v_lo - base) / scale;
    p.v_hi = (p.v_hi - base) / scale;
  }
  return RewardFunction(std::move(pieces));
}

}  // namespace contest
