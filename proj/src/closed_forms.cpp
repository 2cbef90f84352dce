#include "geoconst/closed_forms.hpp"

#include <cmath>

#include "geoconst/error.hpp"
#include "geoconst/numeric_text.hpp"

namespace geoconst {

namespace {

void require_lambda(double lambda) {
  if (!(std::isfinite(lambda) && lambda >= 1.0)) {
    throw ParameterDomainError("lambda must be >= 1, got " + format_number(lambda));
  }
}

}  // namespace

double lyj_bf(double xi, double eta, double lambda) {
  if (!(std::isfinite(xi) && xi > 0.0 && std::isfinite(eta) && eta > 0.0)) {
    throw ParameterDomainError("lyj_bf: xi and eta must be > 0");
  }
  require_lambda(lambda);
  return 1.0 + (2.0 * xi * eta / (xi * xi + eta * eta)) * (1.0 - 1.0 / (lambda * lambda));
}

double cnj_bf(double lambda) {
  require_lambda(lambda);
  return 2.0 - 1.0 / (lambda * lambda);
}

bool cnjp_bf_condition(double p_exp, double lambda) {
  return lambda * lambda * std::pow(1.0 - 1.0 / (lambda * lambda), p_exp / 2.0) >= 1.0;
}

double cnjp_bf(double p_exp, double lambda) {
  if (!(std::isfinite(p_exp) && p_exp >= 2.0)) {
    throw ParameterDomainError("cnjp_bf: p must be >= 2, got " + format_number(p_exp));
  }
  require_lambda(lambda);
  if (!cnjp_bf_condition(p_exp, lambda)) {
    throw ConditionNotMetError("cnjp_bf: lambda^2 (1 - 1/lambda^2)^(p/2) >= 1 fails for p=" +
                               format_number(p_exp) + ", lambda=" + format_number(lambda));
  }
  return 1.0 + std::pow(1.0 - 1.0 / (lambda * lambda), p_exp / 2.0);
}

double james_type_gbf(double t_mean, double p_exp, double lambda) {
  if (!(std::isfinite(p_exp) && p_exp >= 1.0)) {
    throw ParameterDomainError("james_type_gbf: p must be >= 1, got " + format_number(p_exp));
  }
  if (!(std::isfinite(t_mean) && t_mean > 0.0)) {
    throw ParameterDomainError("james_type_gbf: t must be > 0, got " + format_number(t_mean));
  }
  require_lambda(lambda);
  // The t < p branches are not encoded.
  if (t_mean < p_exp) {
    throw UnsupportedBranchError("james_type_gbf: only the t >= p branch is available (t=" +
                                 format_number(t_mean) + ", p=" + format_number(p_exp) + ")");
  }
  const double inner = 1.0 + std::pow(1.0 - 1.0 / std::pow(lambda, p_exp), t_mean / p_exp);
  return std::pow(2.0, 1.0 - 1.0 / t_mean) * std::pow(inner, 1.0 / t_mean);
}

std::optional<double> lookup_closed_form(const SpaceSpec& space, const ConstantQuery& query) {
  space.validate();
  query.validate();
  const bool bf = space.kind == SpaceKind::BanasFraczek;
  switch (query.kind) {
    case ConstantKind::LYJ:
      if (bf) return lyj_bf(query.xi, query.eta, space.lambda);
      break;
    case ConstantKind::CNJ:
      if (bf) return cnj_bf(space.lambda);
      break;
    case ConstantKind::CNJP:
      if (bf) return cnjp_bf(query.p_exp, space.lambda);
      break;
    case ConstantKind::JamesType:
      // R²_λ is X_{λ,2}.
      if (query.tau == 1.0 && space.kind != SpaceKind::LpPlane) {
        const double p = bf ? 2.0 : space.p;
        return james_type_gbf(query.t_mean, p, space.lambda);
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace geoconst
