#include "geoconst/functionals.hpp"

#include <array>
#include <utility>

#include "geoconst/error.hpp"
#include "geoconst/numeric_text.hpp"

namespace geoconst {

namespace {

constexpr double kSphereTol = 1e-9;

constexpr std::array<std::pair<ConstantKind, std::string_view>, 7> kNames{{
    {ConstantKind::LYJ, "lyj"},
    {ConstantKind::LYJPrime, "lyj-prime"},
    {ConstantKind::CNJ, "cnj"},
    {ConstantKind::CNJP, "cnjp"},
    {ConstantKind::James, "james"},
    {ConstantKind::JamesLambdaMu, "james-lm"},
    {ConstantKind::JamesType, "james-type"},
}};

void require_finite(Vec2 x, Vec2 y, const char* what) {
  if (!x.finite() || !y.finite()) {
    throw ParameterDomainError(std::string(what) + ": non-finite input vector");
  }
}

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw ParameterDomainError(std::string(name) + " must be a finite real > 0, got " +
                               format_number(v));
  }
}

void require_not_both_zero(Vec2 x, Vec2 y, const char* what) {
  if (x.is_zero() && y.is_zero()) {
    throw DegenerateInputError(std::string(what) + ": x and y are both zero");
  }
}

void require_on_sphere(const SpaceSpec& s, Vec2 v, const char* what) {
  const double n = detail::norm_unchecked(s, v);
  if (std::fabs(n - 1.0) > kSphereTol) {
    throw PreconditionError(std::string(what) + ": input of norm " + format_number(n) +
                            " is not on the unit sphere");
  }
}

void require_in_ball(const SpaceSpec& s, Vec2 v, const char* what) {
  const double n = detail::norm_unchecked(s, v);
  if (n > 1.0 + kSphereTol) {
    throw PreconditionError(std::string(what) + ": input of norm " + format_number(n) +
                            " is outside the unit ball");
  }
}

}  // namespace

std::string_view constant_name(ConstantKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ConstantKind parse_constant_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw ParameterDomainError("unknown constant '" + std::string(name) + "'");
}

void ConstantQuery::validate() const {
  switch (kind) {
    case ConstantKind::LYJ:
    case ConstantKind::LYJPrime:
      require_positive(xi, "xi");
      require_positive(eta, "eta");
      break;
    case ConstantKind::CNJ:
    case ConstantKind::James:
      break;
    case ConstantKind::CNJP:
      if (!(std::isfinite(p_exp) && p_exp >= 1.0)) {
        throw ParameterDomainError("p-exp must be a finite real >= 1, got " + format_number(p_exp));
      }
      break;
    case ConstantKind::JamesLambdaMu:
      for (auto [v, name] : {std::pair{lam, "lam"}, std::pair{mu, "mu"}}) {
        if (!(std::isfinite(v) && v > 0.0 && v <= 1.0)) {
          throw ParameterDomainError(std::string(name) + " must lie in (0,1], got " +
                                     format_number(v));
        }
      }
      break;
    case ConstantKind::JamesType:
      require_positive(t_mean, "t-mean");
      if (!(std::isfinite(tau) && tau >= 0.0 && tau <= 1.0)) {
        throw ParameterDomainError("tau must lie in [0,1], got " + format_number(tau));
      }
      break;
  }
}

double power_mean(double t, double a, double b) {
  require_positive(t, "power_mean: t");
  if (!(std::isfinite(a) && std::isfinite(b) && a >= 0.0 && b >= 0.0)) {
    throw ParameterDomainError("power_mean: arguments must be finite and nonnegative");
  }
  return detail::power_mean_unchecked(t, a, b);
}

double lyj_expr(const SpaceSpec& s, double xi, double eta, Vec2 x, Vec2 y) {
  s.validate();
  require_positive(xi, "xi");
  require_positive(eta, "eta");
  require_finite(x, y, "lyj_expr");
  require_not_both_zero(x, y, "lyj_expr");
  return detail::lyj_kernel(s, xi, eta, x, y);
}

double lyj_prime_expr(const SpaceSpec& s, double xi, double eta, Vec2 x, Vec2 y) {
  s.validate();
  require_positive(xi, "xi");
  require_positive(eta, "eta");
  require_finite(x, y, "lyj_prime_expr");
  require_on_sphere(s, x, "lyj_prime_expr");
  require_on_sphere(s, y, "lyj_prime_expr");
  return detail::lyj_prime_kernel(s, xi, eta, x, y);
}

double cnj_expr(const SpaceSpec& s, Vec2 x, Vec2 y) {
  s.validate();
  require_finite(x, y, "cnj_expr");
  require_not_both_zero(x, y, "cnj_expr");
  return detail::cnj_kernel(s, x, y);
}

double cnjp_expr(const SpaceSpec& s, double p_exp, Vec2 x, Vec2 y) {
  s.validate();
  if (!(std::isfinite(p_exp) && p_exp >= 1.0)) {
    throw ParameterDomainError("cnjp_expr: p must be >= 1, got " + format_number(p_exp));
  }
  require_finite(x, y, "cnjp_expr");
  require_not_both_zero(x, y, "cnjp_expr");
  return detail::cnjp_kernel(s, p_exp, x, y);
}

double james_min(const SpaceSpec& s, Vec2 x, Vec2 y) {
  s.validate();
  require_finite(x, y, "james_min");
  require_on_sphere(s, x, "james_min");
  require_on_sphere(s, y, "james_min");
  return detail::james_kernel(s, x, y);
}

double james_lm_min(const SpaceSpec& s, double lam, double mu, Vec2 x, Vec2 y) {
  s.validate();
  ConstantQuery{.kind = ConstantKind::JamesLambdaMu, .lam = lam, .mu = mu}.validate();
  require_finite(x, y, "james_lm_min");
  require_in_ball(s, x, "james_lm_min");
  require_in_ball(s, y, "james_lm_min");
  return detail::james_lm_kernel(s, lam, mu, x, y);
}

double james_type_expr(const SpaceSpec& s, double t_mean, double tau, Vec2 x, Vec2 y) {
  s.validate();
  ConstantQuery{.kind = ConstantKind::JamesType, .t_mean = t_mean, .tau = tau}.validate();
  require_finite(x, y, "james_type_expr");
  require_on_sphere(s, x, "james_type_expr");
  require_on_sphere(s, y, "james_type_expr");
  return detail::james_type_kernel(s, t_mean, tau, x, y);
}

double evaluate(const SpaceSpec& s, const ConstantQuery& q, Vec2 x, Vec2 y) {
  switch (q.kind) {
    case ConstantKind::LYJ:
      return lyj_expr(s, q.xi, q.eta, x, y);
    case ConstantKind::LYJPrime:
      return lyj_prime_expr(s, q.xi, q.eta, x, y);
    case ConstantKind::CNJ:
      return cnj_expr(s, x, y);
    case ConstantKind::CNJP:
      return cnjp_expr(s, q.p_exp, x, y);
    case ConstantKind::James:
      return james_min(s, x, y);
    case ConstantKind::JamesLambdaMu:
      return james_lm_min(s, q.lam, q.mu, x, y);
    case ConstantKind::JamesType:
      return james_type_expr(s, q.t_mean, q.tau, x, y);
  }
  return 0.0;
}

}  // namespace geoconst
