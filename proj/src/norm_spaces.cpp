#include "geoconst/norm_spaces.hpp"

#include <map>

#include "geoconst/error.hpp"
#include "geoconst/numeric_text.hpp"

namespace geoconst {

SpaceSpec SpaceSpec::banas_fraczek(double lambda) {
  SpaceSpec s{SpaceKind::BanasFraczek, lambda, 2.0};
  s.validate();
  return s;
}

SpaceSpec SpaceSpec::generalized_bf(double lambda, double p) {
  SpaceSpec s{SpaceKind::GeneralizedBF, lambda, p};
  s.validate();
  return s;
}

SpaceSpec SpaceSpec::lp_plane(double p) {
  SpaceSpec s{SpaceKind::LpPlane, 1.0, p};
  s.validate();
  return s;
}

void SpaceSpec::validate() const {
  const bool uses_lambda = kind != SpaceKind::LpPlane;
  const bool uses_p = kind != SpaceKind::BanasFraczek;
  if (uses_lambda && !(std::isfinite(lambda) && lambda >= 1.0)) {
    throw ParameterDomainError("lambda must be a finite real >= 1, got " + format_number(lambda));
  }
  if (uses_p && !(std::isfinite(p) && p >= 1.0)) {
    throw ParameterDomainError("p must be a finite real >= 1, got " + format_number(p));
  }
}

namespace {

std::map<std::string, double, std::less<>> parse_assignments(std::string_view body,
                                                             std::string_view whole) {
  std::map<std::string, double, std::less<>> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterDomainError("malformed space '" + std::string(whole) + "': expected key=value");
    }
    const std::string key(item.substr(0, eq));
    const auto value = parse_number(item.substr(eq + 1));
    if (!value) {
      throw ParameterDomainError("malformed space '" + std::string(whole) + "': bad number for '" +
                                 key + "'");
    }
    if (!out.emplace(key, *value).second) {
      throw ParameterDomainError("malformed space '" + std::string(whole) + "': duplicate '" + key +
                                 "'");
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

double take(std::map<std::string, double, std::less<>>& kv, std::string_view key,
            std::string_view whole) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw ParameterDomainError("malformed space '" + std::string(whole) + "': missing '" +
                               std::string(key) + "'");
  }
  const double v = it->second;
  kv.erase(it);
  return v;
}

}  // namespace

SpaceSpec parse_space(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterDomainError("malformed space '" + std::string(text) +
                               "': expected bf:..., gbf:... or lp:...");
  }
  const std::string_view tag = text.substr(0, colon);
  auto kv = parse_assignments(text.substr(colon + 1), text);

  SpaceSpec result;
  if (tag == "bf") {
    result = SpaceSpec::banas_fraczek(take(kv, "lambda", text));
  } else if (tag == "gbf") {
    const double lambda = take(kv, "lambda", text);
    result = SpaceSpec::generalized_bf(lambda, take(kv, "p", text));
  } else if (tag == "lp") {
    result = SpaceSpec::lp_plane(take(kv, "p", text));
  } else {
    throw ParameterDomainError("unknown space kind '" + std::string(tag) + "'");
  }
  if (!kv.empty()) {
    throw ParameterDomainError("malformed space '" + std::string(text) + "': unexpected '" +
                               kv.begin()->first + "'");
  }
  return result;
}

std::string format_space(const SpaceSpec& space) {
  switch (space.kind) {
    case SpaceKind::BanasFraczek:
      return "bf:lambda=" + format_number(space.lambda);
    case SpaceKind::GeneralizedBF:
      return "gbf:lambda=" + format_number(space.lambda) + ",p=" + format_number(space.p);
    case SpaceKind::LpPlane:
      return "lp:p=" + format_number(space.p);
  }
  return {};
}

double norm(const SpaceSpec& space, Vec2 v) {
  space.validate();
  if (!v.finite()) throw ParameterDomainError("norm: non-finite coordinates");
  return detail::norm_unchecked(space, v);
}

Vec2 unit_vector(const SpaceSpec& space, double theta) {
  space.validate();
  if (!std::isfinite(theta)) throw ParameterDomainError("unit_vector: non-finite angle");
  return detail::unit_vector_unchecked(space, theta);
}

bool is_extreme_point(const SpaceSpec& space, Vec2 v, double tol) {
  space.validate();
  if (space.kind != SpaceKind::BanasFraczek) {
    throw UnsupportedOperationError("is_extreme_point is defined for Banas-Fraczek spaces only");
  }
  if (!v.finite()) throw ParameterDomainError("is_extreme_point: non-finite coordinates");
  return std::fabs(v.a * v.a + v.b * v.b - 1.0) <= tol &&
         std::fabs(v.a) <= 1.0 / space.lambda + tol;
}

std::vector<Vec2> sample_sphere(const SpaceSpec& space, int n) {
  space.validate();
  if (n < 4) throw ParameterDomainError("sample_sphere needs n >= 4");
  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    points.push_back(detail::unit_vector_unchecked(space, 2.0 * std::numbers::pi * k / n));
  }
  return points;
}

}  // namespace geoconst
