#include "geoconst/lemma_kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "geoconst/error.hpp"
#include "geoconst/numeric_text.hpp"

namespace geoconst {

namespace {

// Lattice endpoints are computed as 1/λ exactly; the slack only absorbs
// callers that build 1/λ through a different expression.
constexpr double kDomainSlack = 1e-12;

void require_in_box(double lambda, double v, const char* name) {
  if (!std::isfinite(v) || std::fabs(v) > 1.0 / lambda + kDomainSlack) {
    throw ParameterDomainError(std::string(name) + " must satisfy |" + name + "| <= 1/lambda, got " +
                               format_number(v));
  }
}

void require_grid(int n) {
  if (n < 2) throw ParameterDomainError("lattice size must be >= 2");
}

void validate(const Lemma2Params& prm) {
  if (!(std::isfinite(prm.lambda) && prm.lambda >= 1.0 && prm.lambda < std::numbers::sqrt2)) {
    throw ParameterDomainError("second lemma needs 1 <= lambda < sqrt(2), got " +
                               format_number(prm.lambda));
  }
  if (!(std::isfinite(prm.t) && prm.t >= 0.0 && prm.t <= 1.0)) {
    throw ParameterDomainError("second lemma needs 0 <= t <= 1, got " + format_number(prm.t));
  }
  if (!(std::isfinite(prm.xi) && prm.xi > 0.0 && std::isfinite(prm.eta) && prm.eta > 0.0)) {
    throw ParameterDomainError("second lemma needs xi, eta > 0");
  }
}

double lemma1_raw(double l2m1, double x, double y) {
  return l2m1 * std::fabs(x * y) + std::sqrt(1.0 - x * x) * std::sqrt(1.0 - y * y);
}

// Shared body of f and g: `qy` weighs the y² term, `qx` the x² term.
double lemma2_raw(const Lemma2Params& prm, double qy, double qx, double x, double y) {
  const double l2 = prm.lambda * prm.lambda;
  const double te = prm.t * prm.xi * prm.eta;
  return 2.0 * te * (l2 - 1.0) * x * y + 2.0 * te * std::sqrt(1.0 - x * x) * std::sqrt(1.0 - y * y) +
         l2 * prm.t * prm.t * qy * y * y + l2 * qx * x * x;
}

template <typename F>
LatticeCheck scan(double lambda, int n, F&& fn) {
  LatticeCheck out;
  const double edge = 1.0 / lambda;
  auto coord = [&](int k) { return k == n - 1 ? edge : (static_cast<double>(k) / (n - 1)) * edge; };
  bool first = true;
  for (int i = 0; i < n; ++i) {
    const double x = coord(i);
    for (int j = 0; j < n; ++j) {
      const double y = coord(j);
      const double v = fn(x, y);
      if (first || v > out.lattice_max) {
        out.lattice_max = v;
        out.argmax = {x, y};
        first = false;
      }
    }
  }
  out.corner_value = fn(edge, edge);
  out.corner_is_maximizer = out.lattice_max - out.corner_value <= kCornerMaxTol;
  return out;
}

}  // namespace

double lemma1_lhs(double lambda, double x1, double y1) {
  if (!(std::isfinite(lambda) && lambda >= std::numbers::sqrt2)) {
    throw ParameterDomainError("first lemma needs lambda >= sqrt(2), got " + format_number(lambda));
  }
  require_in_box(lambda, x1, "x1");
  require_in_box(lambda, y1, "y1");
  return lemma1_raw(lambda * lambda - 1.0, x1, y1);
}

LatticeCheck lemma1_check(double lambda, int grid_n) {
  if (!(std::isfinite(lambda) && lambda >= std::numbers::sqrt2)) {
    throw ParameterDomainError("first lemma needs lambda >= sqrt(2), got " + format_number(lambda));
  }
  require_grid(grid_n);
  const double l2m1 = lambda * lambda - 1.0;
  LatticeCheck out = scan(lambda, grid_n, [&](double x, double y) { return lemma1_raw(l2m1, x, y); });
  out.reference = 2.0 - 2.0 / (lambda * lambda);
  out.margin = out.reference - out.lattice_max;
  out.passed = out.lattice_max <= out.reference + kLemmaBoundTol;
  return out;
}

double lemma2_f(const Lemma2Params& prm, double x, double y) {
  validate(prm);
  require_in_box(prm.lambda, x, "x");
  require_in_box(prm.lambda, y, "y");
  if (x < 0.0 || y < 0.0) throw ParameterDomainError("second lemma needs x, y >= 0");
  return lemma2_raw(prm, prm.xi * prm.xi, prm.eta * prm.eta, x, y);
}

double lemma2_g(const Lemma2Params& prm, double x, double y) {
  validate(prm);
  require_in_box(prm.lambda, x, "x");
  require_in_box(prm.lambda, y, "y");
  if (x < 0.0 || y < 0.0) throw ParameterDomainError("second lemma needs x, y >= 0");
  return lemma2_raw(prm, prm.eta * prm.eta, prm.xi * prm.xi, x, y);
}

double lemma2_f_corner_form(const Lemma2Params& prm) {
  validate(prm);
  const double l2 = prm.lambda * prm.lambda;
  return 4.0 * prm.t * prm.xi * prm.eta * (l2 - 1.0) / l2 + prm.t * prm.t * prm.xi * prm.xi +
         prm.eta * prm.eta;
}

double lemma2_g_corner_form(const Lemma2Params& prm) {
  validate(prm);
  const double l2 = prm.lambda * prm.lambda;
  return 4.0 * prm.t * prm.xi * prm.eta * (l2 - 1.0) / l2 + prm.t * prm.t * prm.eta * prm.eta +
         prm.xi * prm.xi;
}

Lemma2Check lemma2_max_check(const Lemma2Params& prm, int grid_n) {
  validate(prm);
  require_grid(grid_n);
  const double xi2 = prm.xi * prm.xi;
  const double eta2 = prm.eta * prm.eta;

  auto finish = [](LatticeCheck& c, double form) {
    c.reference = form;
    c.margin = form - c.lattice_max;
    c.passed = c.corner_is_maximizer && std::fabs(c.corner_value - form) <= kCornerFormTol;
  };

  Lemma2Check out;
  out.f = scan(prm.lambda, grid_n, [&](double x, double y) { return lemma2_raw(prm, xi2, eta2, x, y); });
  out.g = scan(prm.lambda, grid_n, [&](double x, double y) { return lemma2_raw(prm, eta2, xi2, x, y); });
  finish(out.f, lemma2_f_corner_form(prm));
  finish(out.g, lemma2_g_corner_form(prm));
  out.passed = out.f.passed && out.g.passed;
  return out;
}

}  // namespace geoconst
