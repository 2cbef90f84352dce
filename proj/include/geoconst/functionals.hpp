#pragma once

#include <string>
#include <string_view>

#include "geoconst/norm_spaces.hpp"

namespace geoconst {

enum class ConstantKind { LYJ, LYJPrime, CNJ, CNJP, James, JamesLambdaMu, JamesType };

/// Short CLI name: lyj, lyj-prime, cnj, cnjp, james, james-lm, james-type.
std::string_view constant_name(ConstantKind kind);
/// Inverse of constant_name; throws ParameterDomainError on unknown names.
ConstantKind parse_constant_kind(std::string_view name);

/// Which constant to compute plus its parameters. Only the fields relevant to
/// `kind` are read:
///   LYJ, LYJPrime  -> xi, eta
///   CNJP           -> p_exp
///   JamesLambdaMu  -> lam, mu
///   JamesType      -> t_mean, tau
struct ConstantQuery {
  ConstantKind kind = ConstantKind::LYJ;
  double xi = 1.0;
  double eta = 1.0;
  double lam = 1.0;
  double mu = 1.0;
  double p_exp = 2.0;
  double t_mean = 2.0;
  double tau = 1.0;

  /// Throws ParameterDomainError if a field read by `kind` is out of domain.
  void validate() const;

  friend bool operator==(const ConstantQuery&, const ConstantQuery&) = default;
};

/// ((a^t + b^t)/2)^{1/t}; requires t > 0 and a, b ≥ 0.
double power_mean(double t, double a, double b);

// Checked evaluators. All reject non-finite inputs with ParameterDomainError.
// Ratio forms throw DegenerateInputError when x = y = 0; sphere forms throw
// PreconditionError when an input is off the unit sphere by more than 1e-9.

double lyj_expr(const SpaceSpec& s, double xi, double eta, Vec2 x, Vec2 y);
double lyj_prime_expr(const SpaceSpec& s, double xi, double eta, Vec2 x, Vec2 y);
double cnj_expr(const SpaceSpec& s, Vec2 x, Vec2 y);
double cnjp_expr(const SpaceSpec& s, double p_exp, Vec2 x, Vec2 y);
double james_min(const SpaceSpec& s, Vec2 x, Vec2 y);
/// x, y must lie in the unit ball (‖·‖ ≤ 1 + 1e-9).
double james_lm_min(const SpaceSpec& s, double lam, double mu, Vec2 x, Vec2 y);
double james_type_expr(const SpaceSpec& s, double t_mean, double tau, Vec2 x, Vec2 y);

/// Dispatches on query.kind to the evaluator above (checked).
double evaluate(const SpaceSpec& s, const ConstantQuery& q, Vec2 x, Vec2 y);

namespace detail {

inline double sq(double v) { return v * v; }

inline double power_mean_unchecked(double t, double a, double b) {
  if (t == 1.0) return 0.5 * (a + b);
  if (t == 2.0) return std::sqrt(0.5 * (a * a + b * b));
  return std::pow(0.5 * (abs_pow(a, t) + abs_pow(b, t)), 1.0 / t);
}

inline double lyj_kernel(const SpaceSpec& s, double xi, double eta, Vec2 x, Vec2 y) {
  const double num = sq(norm_unchecked(s, xi * x + eta * y)) + sq(norm_unchecked(s, eta * x - xi * y));
  return num / ((xi * xi + eta * eta) * (sq(norm_unchecked(s, x)) + sq(norm_unchecked(s, y))));
}

inline double lyj_prime_kernel(const SpaceSpec& s, double xi, double eta, Vec2 x, Vec2 y) {
  const double num = sq(norm_unchecked(s, xi * x + eta * y)) + sq(norm_unchecked(s, eta * x - xi * y));
  return num / (2.0 * (sq(norm_unchecked(s, x)) + sq(norm_unchecked(s, y))));
}

inline double cnj_kernel(const SpaceSpec& s, Vec2 x, Vec2 y) {
  const double num = sq(norm_unchecked(s, x + y)) + sq(norm_unchecked(s, x - y));
  return num / (2.0 * sq(norm_unchecked(s, x)) + 2.0 * sq(norm_unchecked(s, y)));
}

inline double cnjp_kernel(const SpaceSpec& s, double p, Vec2 x, Vec2 y) {
  const double num = abs_pow(norm_unchecked(s, x + y), p) + abs_pow(norm_unchecked(s, x - y), p);
  const double den = (p == 2.0 ? 2.0 : std::exp2(p - 1.0)) *
                     (abs_pow(norm_unchecked(s, x), p) + abs_pow(norm_unchecked(s, y), p));
  return num / den;
}

inline double james_kernel(const SpaceSpec& s, Vec2 x, Vec2 y) {
  return std::min(norm_unchecked(s, x + y), norm_unchecked(s, x - y));
}

inline double james_lm_kernel(const SpaceSpec& s, double lam, double mu, Vec2 x, Vec2 y) {
  return std::min(norm_unchecked(s, lam * x + mu * y), norm_unchecked(s, mu * x - lam * y));
}

inline double james_type_kernel(const SpaceSpec& s, double t, double tau, Vec2 x, Vec2 y) {
  return power_mean_unchecked(t, norm_unchecked(s, x + tau * y), norm_unchecked(s, x - tau * y));
}

/// Unchecked dispatch used by the search inner loops.
inline double evaluate_unchecked(const SpaceSpec& s, const ConstantQuery& q, Vec2 x, Vec2 y) {
  switch (q.kind) {
    case ConstantKind::LYJ:
      return lyj_kernel(s, q.xi, q.eta, x, y);
    case ConstantKind::LYJPrime:
      return lyj_prime_kernel(s, q.xi, q.eta, x, y);
    case ConstantKind::CNJ:
      return cnj_kernel(s, x, y);
    case ConstantKind::CNJP:
      return cnjp_kernel(s, q.p_exp, x, y);
    case ConstantKind::James:
      return james_kernel(s, x, y);
    case ConstantKind::JamesLambdaMu:
      return james_lm_kernel(s, q.lam, q.mu, x, y);
    case ConstantKind::JamesType:
      return james_type_kernel(s, q.t_mean, q.tau, x, y);
  }
  return 0.0;
}

}  // namespace detail

}  // namespace geoconst
