#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace geoconst {

/// A point of the real plane.
struct Vec2 {
  double a = 0.0;
  double b = 0.0;

  friend constexpr Vec2 operator+(Vec2 u, Vec2 v) { return {u.a + v.a, u.b + v.b}; }
  friend constexpr Vec2 operator-(Vec2 u, Vec2 v) { return {u.a - v.a, u.b - v.b}; }
  friend constexpr Vec2 operator-(Vec2 v) { return {-v.a, -v.b}; }
  friend constexpr Vec2 operator*(double c, Vec2 v) { return {c * v.a, c * v.b}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  [[nodiscard]] bool finite() const { return std::isfinite(a) && std::isfinite(b); }
  [[nodiscard]] bool is_zero() const { return a == 0.0 && b == 0.0; }
};

enum class SpaceKind { BanasFraczek, GeneralizedBF, LpPlane };

/// Tagged description of a normed plane.
///
///  - BanasFraczek(λ):    ‖(a,b)‖ = max{λ|a|, √(a²+b²)}
///  - GeneralizedBF(λ,p): ‖(a,b)‖ = max{λ|a|, (|a|^p+|b|^p)^{1/p}}
///  - LpPlane(p):         ‖(a,b)‖ = (|a|^p+|b|^p)^{1/p}
///
/// Fields not used by `kind` are ignored. Construct through the factories,
/// which validate; a default-constructed value is the Euclidean plane.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::BanasFraczek;
  double lambda = 1.0;
  double p = 2.0;

  static SpaceSpec banas_fraczek(double lambda);
  static SpaceSpec generalized_bf(double lambda, double p);
  static SpaceSpec lp_plane(double p);

  /// Throws ParameterDomainError unless λ ≥ 1 / p ≥ 1 where they apply.
  void validate() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// Parses `bf:lambda=<real>`, `gbf:lambda=<real>,p=<real>` or `lp:p=<real>`.
/// Number parsing is locale independent. Throws ParameterDomainError.
SpaceSpec parse_space(std::string_view text);

/// Inverse of parse_space; numbers carry 12 significant digits.
std::string format_space(const SpaceSpec& space);

namespace detail {

/// |x|^p with a fast path for small integral exponents.
inline double abs_pow(double x, double p) {
  x = std::fabs(x);
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  if (p == 3.0) return x * x * x;
  if (p == 4.0) {
    const double s = x * x;
    return s * s;
  }
  return std::pow(x, p);
}

inline double lp_length(double a, double b, double p) {
  if (p == 2.0) return std::sqrt(a * a + b * b);
  if (p == 1.0) return std::fabs(a) + std::fabs(b);
  const double m = std::max(std::fabs(a), std::fabs(b));
  if (m == 0.0) return 0.0;
  // Scale by the larger coordinate so |a|^p stays representable.
  return m * std::pow(abs_pow(a / m, p) + abs_pow(b / m, p), 1.0 / p);
}

/// Norm evaluation without parameter or finiteness checks.
inline double norm_unchecked(const SpaceSpec& s, Vec2 v) {
  switch (s.kind) {
    case SpaceKind::BanasFraczek:
      return std::max(s.lambda * std::fabs(v.a), std::sqrt(v.a * v.a + v.b * v.b));
    case SpaceKind::GeneralizedBF:
      return std::max(s.lambda * std::fabs(v.a), lp_length(v.a, v.b, s.p));
    case SpaceKind::LpPlane:
      return lp_length(v.a, v.b, s.p);
  }
  return 0.0;
}

/// Unit vector in direction θ without validation.
inline Vec2 unit_vector_unchecked(const SpaceSpec& s, double theta) {
  const Vec2 d{std::cos(theta), std::sin(theta)};
  const double n = norm_unchecked(s, d);
  return {d.a / n, d.b / n};
}

}  // namespace detail

/// Norm of `v` in `space`. Throws ParameterDomainError on an invalid space or
/// non-finite `v`.
double norm(const SpaceSpec& space, Vec2 v);

/// (cos θ, sin θ) rescaled onto the unit sphere of `space`.
Vec2 unit_vector(const SpaceSpec& space, double theta);

inline constexpr double kExtremeTol = 1e-9;

/// Membership in ext(B) = {z : z₁²+z₂² = 1, |z₁| ≤ 1/λ} for BanasFraczek only;
/// other kinds throw UnsupportedOperationError.
bool is_extreme_point(const SpaceSpec& space, Vec2 v, double tol = kExtremeTol);

/// n points unit_vector(space, 2πk/n), k = 0..n-1. Requires n ≥ 4.
std::vector<Vec2> sample_sphere(const SpaceSpec& space, int n);

}  // namespace geoconst
