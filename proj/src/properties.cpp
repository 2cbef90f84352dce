#include "geoconst/properties.hpp"

#include <cmath>

#include "geoconst/closed_forms.hpp"
#include "geoconst/error.hpp"
#include "geoconst/numeric_text.hpp"

namespace geoconst {

namespace {

void require_positive_pair(double xi, double eta) {
  if (!(std::isfinite(xi) && xi > 0.0 && std::isfinite(eta) && eta > 0.0)) {
    throw ParameterDomainError("xi and eta must be finite reals > 0");
  }
}

// Open upper end: at ξ = 1.5η the bound equals 1 and can never be beaten.
void require_threshold_region(double xi, double eta) {
  require_positive_pair(xi, eta);
  if (!(eta <= xi && xi < 1.5 * eta)) {
    throw ParameterDomainError("weak normal structure region needs eta <= xi < 1.5 eta, got xi=" +
                               format_number(xi) + ", eta=" + format_number(eta));
  }
}

}  // namespace

bool super_reflexive_sufficient(double lyj_value) { return lyj_value < 2.0; }

double wns_bound(double xi, double eta) {
  require_positive_pair(xi, eta);
  if (!(eta <= xi && xi <= 2.0 * eta)) {
    throw ParameterDomainError("wns_bound needs eta <= xi <= 2 eta, got xi=" + format_number(xi) +
                               ", eta=" + format_number(eta));
  }
  const double a = xi + eta;
  const double b = 2.0 * eta - xi;
  return (a * a + b * b) / (2.0 * (xi * xi + eta * eta));
}

double wns_lambda_threshold(double xi, double eta) {
  require_threshold_region(xi, eta);
  return std::sqrt(4.0 * xi * eta / (6.0 * xi * eta - 3.0 * eta * eta));
}

std::vector<RegionRow> wns_region_scan(const RegionQuery& q) {
  require_threshold_region(q.xi, q.eta);
  if (q.samples < 1) throw ParameterDomainError("region scan needs at least one sample");
  if (!(std::isfinite(q.lambda_lo) && std::isfinite(q.lambda_hi) && q.lambda_lo >= 1.0 &&
        q.lambda_hi >= q.lambda_lo)) {
    throw ParameterDomainError("region scan needs 1 <= lambda-from <= lambda-to");
  }
  const double bound = wns_bound(q.xi, q.eta);
  std::vector<RegionRow> rows;
  rows.reserve(static_cast<std::size_t>(q.samples));
  for (int k = 0; k < q.samples; ++k) {
    const double lambda =
        q.samples == 1 ? q.lambda_lo
                       : q.lambda_lo + (q.lambda_hi - q.lambda_lo) * k / (q.samples - 1);
    const double lyj = lyj_bf(q.xi, q.eta, lambda);
    rows.push_back({lambda, lyj, bound, lyj < bound});
  }
  return rows;
}

Verdict strictly_below(double value, double limit, double tol) {
  if (value < limit - tol) return Verdict::Holds;
  if (value >= limit + tol) return Verdict::Fails;
  return Verdict::Inconclusive;
}

Verdict super_reflexive_verdict(double lyj_search_value, double tol) {
  return strictly_below(lyj_search_value, 2.0, tol);
}

Verdict wns_verdict(double lyj_search_value, double xi, double eta, double tol) {
  return strictly_below(lyj_search_value, wns_bound(xi, eta), tol);
}

}  // namespace geoconst
