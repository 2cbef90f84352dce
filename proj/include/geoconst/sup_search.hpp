#pragma once

#include <cstdint>
#include <optional>

#include "geoconst/functionals.hpp"
#include "geoconst/norm_spaces.hpp"

namespace geoconst {

/// Lattice resolutions and refinement schedule for compute_constant.
///
/// The angle lattice is θ_i = 2πi/angle_grid_n; the scale lattice is
/// t_k = k/(scale_grid_n − 1) (t = 1 alone when scale_grid_n is 1). Ball×ball
/// searches (JamesLambdaMu) are four dimensional and use a quarter of both
/// resolutions, see ball_angle_grid_n / ball_radius_grid_n.
struct SearchConfig {
  int angle_grid_n = 720;
  int scale_grid_n = 65;
  /// Number of step-size reductions performed by the pattern search.
  int refine_iters = 60;
  double refine_shrink = 0.5;
  /// Initial pattern-search step, in lattice cells of each coordinate.
  double initial_step_cells = 1.0;
  /// How many of the best lattice points are refined.
  int refine_starts = 8;
  /// Worker count for the lattice scan; 0 picks hardware concurrency.
  /// Results do not depend on it.
  int threads = 1;
  /// Agreement tolerance used by verify_against_closed_form.
  double accept_tol = 1e-3;

  void validate() const;
  [[nodiscard]] int ball_angle_grid_n() const;
  [[nodiscard]] int ball_radius_grid_n() const;
};

/// Which of the two unit vectors carries the scale factor t.
enum class Branch { ScaleY, ScaleX };

/// Maximizing point of a search. `x` and `y` are unit vectors
/// (x = u(theta_x), y = u(theta_y)); the functional is evaluated at
/// (radius_x·x, t·y) for ScaleY and at (t·x, y) for ScaleX. radius_x differs
/// from 1 only for ball×ball searches.
struct Witness {
  Vec2 x;
  Vec2 y;
  double t = 1.0;
  double theta_x = 0.0;
  double theta_y = 0.0;
  Branch branch = Branch::ScaleY;
  double radius_x = 1.0;
  double value = 0.0;

  [[nodiscard]] Vec2 point_x() const { return branch == Branch::ScaleX ? t * x : radius_x * x; }
  [[nodiscard]] Vec2 point_y() const { return branch == Branch::ScaleY ? t * y : y; }
};

/// Builds a witness from angles and evaluates the functional there.
Witness make_witness(const SpaceSpec& space, const ConstantQuery& query, double theta_x,
                     double theta_y, double t = 1.0, Branch branch = Branch::ScaleY,
                     double radius_x = 1.0);

struct ComputationResult {
  ConstantQuery query;
  SpaceSpec space;
  double value = 0.0;
  Witness witness;
  std::optional<double> closed_form;
  std::optional<double> abs_diff;
  /// Set by verify_against_closed_form: abs_diff ≤ accept_tol.
  std::optional<bool> agrees;
  std::int64_t evaluations = 0;
  /// Best raw lattice value. value − grid_value is a heuristic indication of
  /// how much refinement mattered, not an error bound.
  double grid_value = 0.0;
};

/// Numeric supremum of the functional selected by `query` over its domain.
///
///  - LYJ, CNJ, CNJP: x = u(θ₁), y = t·u(θ₂) and x = t·u(θ₁), y = u(θ₂), t ∈ [0,1]
///    (homogeneity reduces (x,y) ≠ 0 to max(‖x‖,‖y‖) = 1).
///  - LYJPrime, James, JamesType: x, y on the unit sphere.
///  - JamesLambdaMu: x, y in the unit ball.
///
/// A lattice scan is followed by pattern-search refinement of the best
/// lattice points. Ties on the lattice go to the lexicographically smallest
/// (θ₁, θ₂, t, branch) index, so the result is bit-identical for any thread
/// count. Throws ParameterDomainError on invalid inputs and
/// NumericFailureError when the functional is not finite somewhere.
ComputationResult compute_constant(const SpaceSpec& space, const ConstantQuery& query,
                                   const SearchConfig& cfg = {});

/// Derivative-free pattern search around `start`, over (θ₁, θ₂[, t[, r]]).
/// Every step tries all 3^d − 1 combined moves; the step shrinks by
/// refine_shrink when none improves, until refine_iters reductions are done.
/// The returned value is never below the start value.
Witness refine_local(const SpaceSpec& space, const ConstantQuery& query, const Witness& start,
                     const SearchConfig& cfg = {});

/// compute_constant plus the encoded closed form, abs_diff and agreement.
/// Throws UnsupportedCombinationError when no closed form exists.
ComputationResult verify_against_closed_form(const SpaceSpec& space, const ConstantQuery& query,
                                             const SearchConfig& cfg = {});

}  // namespace geoconst
