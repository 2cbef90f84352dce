#pragma once

#include "geoconst/norm_spaces.hpp"

namespace geoconst {

/// Outcome of a brute-force lattice scan over [0, 1/λ]².
///
/// The lattice is x_i = (i/(n−1))/λ, y_j = (j/(n−1))/λ. `argmax` is the
/// lexicographically smallest (i, j) attaining the exact lattice maximum.
struct LatticeCheck {
  bool passed = false;
  Vec2 argmax;               ///< (x, y) of the lattice maximum
  double lattice_max = 0.0;
  double corner_value = 0.0; ///< function value at (1/λ, 1/λ)
  double reference = 0.0;    ///< lemma bound (1) or stated corner closed form (2)
  /// reference − lattice_max; negative when the lattice beats the claim.
  double margin = 0.0;
  /// lattice_max − corner_value ≤ 1e-9: the corner is among the maximizers.
  bool corner_is_maximizer = false;
};

inline constexpr double kLemmaBoundTol = 1e-12;
inline constexpr double kCornerMaxTol = 1e-9;
inline constexpr double kCornerFormTol = 1e-12;

/// (λ²−1)|x₁y₁| + √(1−x₁²)√(1−y₁²), for λ ≥ √2 and |x₁|, |y₁| ≤ 1/λ.
double lemma1_lhs(double lambda, double x1, double y1);

/// Checks lemma1_lhs ≤ 2 − 2/λ² (+1e-12) on an n×n lattice; n ≥ 2, λ ≥ √2.
LatticeCheck lemma1_check(double lambda, int grid_n);

/// Parameters shared by the two quadratic-plus-root functions of the second lemma.
struct Lemma2Params {
  double lambda = 1.0;  ///< in [1, √2)
  double t = 0.0;       ///< in [0, 1]
  double xi = 1.0;      ///< > 0
  double eta = 1.0;     ///< > 0
};

/// f = 2t(λ²−1)ξηxy + 2tξη√(1−x²)√(1−y²) + λ²t²ξ²y² + λ²η²x²
double lemma2_f(const Lemma2Params& prm, double x, double y);
/// g: f with ξ² and η² exchanged in the two quadratic terms.
double lemma2_g(const Lemma2Params& prm, double x, double y);

/// Stated corner values: 4tξη(λ²−1)/λ² + t²ξ² + η² and 4tξη(λ²−1)/λ² + t²η² + ξ².
double lemma2_f_corner_form(const Lemma2Params& prm);
double lemma2_g_corner_form(const Lemma2Params& prm);

struct Lemma2Check {
  bool passed = false;
  LatticeCheck f;
  LatticeCheck g;
};

/// Passes iff, for both f and g, the corner (1/λ,1/λ) attains the lattice
/// maximum within 1e-9 and matches its stated closed form within 1e-12.
Lemma2Check lemma2_max_check(const Lemma2Params& prm, int grid_n);

}  // namespace geoconst
