#pragma once

#include <vector>

namespace geoconst {

/// Sufficient condition for super-reflexivity: L_YJ < 2.
bool super_reflexive_sufficient(double lyj_value);

/// Upper bound on L_YJ implying weak normal structure:
/// ((ξ+η)² + (2η−ξ)²) / (2(ξ²+η²)), defined for η ≤ ξ ≤ 2η.
double wns_bound(double xi, double eta);

/// √(4ξη/(6ξη−3η²)); for 1 ≤ λ below it, lyj_bf(ξ,η,λ) < wns_bound(ξ,η).
/// Requires η ≤ ξ < 1.5η.
double wns_lambda_threshold(double xi, double eta);

struct RegionQuery {
  double xi = 1.0;
  double eta = 1.0;
  double lambda_lo = 1.0;
  double lambda_hi = 2.0;
  int samples = 11;
};

struct RegionRow {
  double lambda = 0.0;
  double lyj = 0.0;
  double bound = 0.0;
  bool holds = false;  ///< strict: lyj < bound
};

/// λ_k = lo + k(hi − lo)/(samples − 1); a single sample uses lo.
std::vector<RegionRow> wns_region_scan(const RegionQuery& q);

/// Three-valued comparison used when the L_YJ value comes from a numeric
/// search instead of the closed form.
enum class Verdict { Holds, Fails, Inconclusive };

/// Holds if value < limit − tol, Fails if value ≥ limit + tol, otherwise
/// Inconclusive.
Verdict strictly_below(double value, double limit, double tol);

Verdict super_reflexive_verdict(double lyj_search_value, double tol);
Verdict wns_verdict(double lyj_search_value, double xi, double eta, double tol);

}  // namespace geoconst
