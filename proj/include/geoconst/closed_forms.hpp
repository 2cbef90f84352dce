#pragma once

#include <optional>

#include "geoconst/functionals.hpp"
#include "geoconst/norm_spaces.hpp"

namespace geoconst {

/// L_YJ(ξ,η) on the Banaś–Frączek plane: 1 + (2ξη/(ξ²+η²))(1 − 1/λ²).
/// Throws ParameterDomainError unless ξ, η > 0 and λ ≥ 1.
double lyj_bf(double xi, double eta, double lambda);

/// C_NJ on the Banaś–Frączek plane: 2 − 1/λ².
double cnj_bf(double lambda);

/// C_NJ^(p) on the Banaś–Frączek plane: 1 + (1 − 1/λ²)^{p/2}.
/// Requires p ≥ 2 and λ²(1 − 1/λ²)^{p/2} ≥ 1, otherwise ConditionNotMetError.
double cnjp_bf(double p_exp, double lambda);

/// True when λ²(1 − 1/λ²)^{p/2} ≥ 1.
bool cnjp_bf_condition(double p_exp, double lambda);

/// James-type constant J_{X,t}(1) on X_{λ,p}, branch t ≥ p only:
/// 2^{1−1/t}(1 + (1 − 1/λ^p)^{t/p})^{1/t}. t < p throws UnsupportedBranchError.
double james_type_gbf(double t_mean, double p_exp, double lambda);

/// Closed form for (space, query) when one is encoded, else nullopt.
/// Domain errors in the parameters still throw; a validity condition that
/// fails (CNJP) yields ConditionNotMetError.
std::optional<double> lookup_closed_form(const SpaceSpec& space, const ConstantQuery& query);

}  // namespace geoconst
