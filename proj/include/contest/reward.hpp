#pragma once

#include <utility>
#include <vector>

namespace contest {

enum class RewardKind { step, piecewise_linear, mixed };

// One affine stretch of R on [r_lo, r_hi): value v_lo at r_lo, limit v_hi
// at r_hi. A flat stretch has v_lo == v_hi.
struct RewardPiece {
  double r_lo;
  double r_hi;
  double v_lo;
  double v_hi;
};

// Maximal interval on which the rank transform g is constant.
// g == level on (y_lo, y_hi]; for the bottom segment g(y_lo) == level too.
struct FlatSegment {
  double level;
  double y_lo;
  double y_hi;
};

// A run of g between consecutive corners: flat (z_lo == z_hi) or strictly
// increasing affine. Runs are ordered by y and jumps of g appear as gaps
// between the z-ranges of consecutive runs.
struct GRun {
  double y_lo;
  double y_hi;
  double z_lo;  // g(y_lo+)
  double z_hi;  // g(y_hi)
};

// Right-continuous decreasing reward on [0,1], stored as finitely many
// step/affine pieces. Left-continuous at the last rank by construction:
// R(1) is the limit value of the final piece. Immutable once built.
class RewardFunction {
 public:
  static RewardFunction step(const std::vector<double>& interior_breakpoints,
                             const std::vector<double>& values);
  static RewardFunction piecewise_linear(
      const std::vector<std::pair<double, double>>& knots);
  static RewardFunction from_pieces(std::vector<RewardPiece> pieces);
  // Normalized cutoff reward: pays 1/alpha to ranks in [0, alpha).
  static RewardFunction cutoff(double alpha);
  // R(r) = scale * (1 - r).
  static RewardFunction linear(double scale = 2.0);

  RewardKind kind() const;

  double operator()(double r) const { return eval(r); }
  double eval(double r) const;
  double eval_left(double r) const;  // R(r-)

  // g(y) = R(1-y): increasing and left-continuous.
  double g(double y) const;
  double g_left(double y) const;   // equals g(y); kept for symmetry
  double g_right(double y) const;  // g(y+)

  // Right-continuous inverse: inf{y : g(y) > z}, with g_inverse(R(0)) = 1.
  double g_inverse(double z) const;

  double r0() const;  // R(0)
  double r1() const;  // R(1)
  double mean() const;

  double integral(double r_lo, double r_hi) const;    // exact ∫ R over [r_lo, r_hi]
  double integral_g(double y_lo, double y_hi) const;  // exact ∫ g over [y_lo, y_hi]

  // Interior jump points of g, i.e. J(g) = {y in (0,1): g(y-) < g(y+)}.
  std::vector<double> jump_set() const;
  std::vector<FlatSegment> flat_segments() const;
  std::vector<GRun> g_runs() const;

  // (R - R(1)) / (mean - R(1)): same equilibrium, R(1) = 0 and mean 1.
  RewardFunction normalized() const;

  const std::vector<RewardPiece>& pieces() const { return pieces_; }

 private:
  explicit RewardFunction(std::vector<RewardPiece> pieces);
  void validate() const;
  // Index of the piece whose [r_lo, r_hi) contains r (r == 1 maps to last).
  std::size_t piece_index(double r) const;

  std::vector<RewardPiece> pieces_;
  double mean_ = 0.0;
};

}  // namespace contest
