#include <doctest.h>

#include <cmath>
#include <random>

#include "geoconst/error.hpp"
#include "geoconst/functionals.hpp"

using namespace geoconst;
using doctest::Approx;

namespace {

struct WitnessPair {
  Vec2 x;
  Vec2 y;
};

// The flat-cap corners (1/λ, ±√(1−1/λ²)).
WitnessPair corners(double lambda) {
  const double s = std::sqrt(1.0 - 1.0 / (lambda * lambda));
  return {{1.0 / lambda, s}, {1.0 / lambda, -s}};
}

Vec2 random_vec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng)};
}

const SpaceSpec kEuclid = SpaceSpec::lp_plane(2.0);

}  // namespace

TEST_SUITE("functionals") {

TEST_CASE("constant names round-trip") {
  for (auto k : {ConstantKind::LYJ, ConstantKind::LYJPrime, ConstantKind::CNJ, ConstantKind::CNJP,
                 ConstantKind::James, ConstantKind::JamesLambdaMu, ConstantKind::JamesType}) {
    CHECK(parse_constant_kind(constant_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_constant_kind("jordan"), ParameterDomainError);
}

TEST_CASE("query validation reads only relevant fields") {
  CHECK_NOTHROW(ConstantQuery{.kind = ConstantKind::CNJ, .xi = -1.0}.validate());
  CHECK_THROWS_AS((ConstantQuery{.kind = ConstantKind::LYJ, .xi = 0.0}.validate()), ParameterDomainError);
  CHECK_THROWS_AS((ConstantQuery{.kind = ConstantKind::CNJP, .p_exp = 0.5}.validate()), ParameterDomainError);
  CHECK_THROWS_AS((ConstantQuery{.kind = ConstantKind::JamesLambdaMu, .lam = 1.5}.validate()),
                  ParameterDomainError);
  CHECK_THROWS_AS((ConstantQuery{.kind = ConstantKind::JamesType, .tau = 1.5}.validate()),
                  ParameterDomainError);
  CHECK_THROWS_AS((ConstantQuery{.kind = ConstantKind::JamesType, .t_mean = 0.0}.validate()),
                  ParameterDomainError);
}

TEST_CASE("power_mean") {
  CHECK(power_mean(1.0, 2.0, 4.0) == 3.0);
  CHECK(power_mean(2.0, 0.0, 2.0) == Approx(std::sqrt(2.0)));
  for (double t : {0.3, 1.0, 2.0, 3.7}) CHECK(power_mean(t, 1.25, 1.25) == Approx(1.25).epsilon(1e-15));
  CHECK_THROWS_AS(power_mean(0.0, 1.0, 1.0), ParameterDomainError);
  CHECK_THROWS_AS(power_mean(-1.0, 1.0, 1.0), ParameterDomainError);
  CHECK_THROWS_AS(power_mean(1.0, -1.0, 1.0), ParameterDomainError);
}

TEST_CASE("lyj_expr examples") {
  const auto bf = SpaceSpec::banas_fraczek(2.0);
  CHECK(lyj_expr(bf, 2.0, 3.0, {0.3, -0.7}, {0.0, 0.0}) == Approx(1.0).epsilon(1e-15));
  for (double lambda : {1.0, 1.1, std::sqrt(2.0), 2.0, 5.0}) {
    const auto s = SpaceSpec::banas_fraczek(lambda);
    const auto [x, y] = corners(lambda);
    for (auto [xi, eta] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}, {1.0, 5.0}}) {
      const double expected = 1.0 + (2.0 * xi * eta / (xi * xi + eta * eta)) * (1.0 - 1.0 / (lambda * lambda));
      CHECK(lyj_expr(s, xi, eta, x, y) == Approx(expected).epsilon(1e-14));
    }
  }
  std::mt19937_64 rng(3);
  const auto euclid = SpaceSpec::banas_fraczek(1.0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(lyj_expr(euclid, 1.7, 0.4, random_vec(rng), random_vec(rng)) == Approx(1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS((lyj_expr(bf, 1.0, 1.0, {0.0, 0.0}, {0.0, 0.0})), DegenerateInputError);
  CHECK_THROWS_AS((lyj_expr(bf, 0.0, 1.0, {1.0, 0.0}, {0.0, 0.0})), ParameterDomainError);
  CHECK_THROWS_AS((lyj_expr(bf, 1.0, 1.0, {INFINITY, 0.0}, {0.0, 0.0})), ParameterDomainError);
}

TEST_CASE("lyj_prime_expr examples") {
  CHECK(lyj_prime_expr(kEuclid, 1.0, 1.0, {1.0, 0.0}, {0.0, 1.0}) == Approx(1.0));
  const Vec2 x{0.6, 0.8};
  CHECK(lyj_prime_expr(kEuclid, 1.0, 1.0, x, x) == Approx(1.0));
  // Witness corners at λ = 2: ‖x+y‖ = 2, ‖x−y‖ = 2√(3/4), so (4 + 3)/4.
  const auto [cx, cy] = corners(2.0);
  CHECK(lyj_prime_expr(SpaceSpec::banas_fraczek(2.0), 1.0, 1.0, cx, cy) == Approx(1.75).epsilon(1e-14));
  CHECK_THROWS_AS((lyj_prime_expr(kEuclid, 1.0, 1.0, {0.5, 0.0}, {0.0, 1.0})), PreconditionError);
}

TEST_CASE("cnj_expr examples") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    CHECK(cnj_expr(kEuclid, random_vec(rng), random_vec(rng)) == Approx(1.0).epsilon(1e-13));
  }
  for (double lambda : {1.2, 2.0, 5.0}) {
    const auto [x, y] = corners(lambda);
    CHECK(cnj_expr(SpaceSpec::banas_fraczek(lambda), x, y) == Approx(2.0 - 1.0 / (lambda * lambda)).epsilon(1e-14));
  }
  CHECK(cnj_expr(SpaceSpec::banas_fraczek(3.0), {0.2, 0.1}, {0.0, 0.0}) == Approx(1.0));
  CHECK_THROWS_AS((cnj_expr(kEuclid, {0.0, 0.0}, {0.0, 0.0})), DegenerateInputError);
}

TEST_CASE("cnjp_expr examples") {
  std::mt19937_64 rng(6);
  const auto bf = SpaceSpec::banas_fraczek(1.7);
  for (int i = 0; i < 10000; ++i) {
    const Vec2 x = random_vec(rng);
    const Vec2 y = random_vec(rng);
    CHECK(cnjp_expr(bf, 2.0, x, y) == Approx(cnj_expr(bf, x, y)).epsilon(1e-14));
  }
  for (double p : {1.0, 1.5, 3.0, 4.0}) {
    CHECK(cnjp_expr(bf, p, {0.3, 0.2}, {0.0, 0.0}) == Approx(std::pow(2.0, 2.0 - p)).epsilon(1e-14));
  }
  const auto [x, y] = corners(std::sqrt(2.0));
  CHECK(cnjp_expr(SpaceSpec::banas_fraczek(std::sqrt(2.0)), 2.0, x, y) == Approx(1.5).epsilon(1e-14));
  CHECK_THROWS_AS(cnjp_expr(bf, 0.9, x, y), ParameterDomainError);
  CHECK_THROWS_AS((cnjp_expr(bf, 2.0, {0.0, 0.0}, {0.0, 0.0})), DegenerateInputError);
}

TEST_CASE("james_min examples") {
  const Vec2 x{0.6, 0.8};
  CHECK(james_min(kEuclid, x, x) == 0.0);
  CHECK(james_min(kEuclid, x, -x) == 0.0);
  CHECK(james_min(kEuclid, {1.0, 0.0}, {0.0, 1.0}) == Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS((james_min(kEuclid, {2.0, 0.0}, {0.0, 1.0})), PreconditionError);
}

TEST_CASE("james_lm_min examples") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(0.0, 6.3);
  const auto bf = SpaceSpec::banas_fraczek(1.8);
  for (int i = 0; i < 200; ++i) {
    const Vec2 x = unit_vector(bf, angle(rng));
    const Vec2 y = unit_vector(bf, angle(rng));
    CHECK(james_lm_min(bf, 1.0, 1.0, x, y) == james_min(bf, x, y));
  }
  CHECK(james_lm_min(bf, 0.3, 0.7, {0.0, 0.0}, {0.0, 0.0}) == 0.0);
  CHECK(james_lm_min(kEuclid, 0.5, 0.5, {1.0, 0.0}, {0.0, 1.0}) == Approx(std::sqrt(2.0) / 2.0));
  CHECK_THROWS_AS((james_lm_min(kEuclid, 0.5, 0.5, {1.1, 0.0}, {0.0, 1.0})), PreconditionError);
  CHECK_THROWS_AS((james_lm_min(kEuclid, 0.0, 0.5, {0.1, 0.0}, {0.0, 1.0})), ParameterDomainError);
}

TEST_CASE("james_type_expr examples") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> angle(0.0, 6.3);
  const auto gbf = SpaceSpec::generalized_bf(2.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Vec2 x = unit_vector(gbf, angle(rng));
    const Vec2 y = unit_vector(gbf, angle(rng));
    CHECK(james_type_expr(gbf, 2.5, 0.0, x, y) == Approx(1.0).epsilon(1e-14));
    const Vec2 ex = unit_vector(kEuclid, angle(rng));
    const Vec2 ey = unit_vector(kEuclid, angle(rng));
    CHECK(james_type_expr(kEuclid, 2.0, 1.0, ex, ey) == Approx(std::sqrt(2.0)).epsilon(1e-14));
  }
  const Vec2 x{0.6, 0.8};
  CHECK(james_type_expr(kEuclid, 1.0, 1.0, x, x) == Approx(1.0));
  CHECK_THROWS_AS((james_type_expr(kEuclid, 2.0, 1.0, {0.5, 0.0}, x)), PreconditionError);
}

TEST_CASE("lyj_expr invariances") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> scale(-5.0, 5.0);
  std::uniform_real_distribution<double> param(0.1, 5.0);
  std::uniform_real_distribution<double> lam(1.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const auto s = SpaceSpec::banas_fraczek(lam(rng));
    const double xi = param(rng);
    const double eta = param(rng);
    const Vec2 x = random_vec(rng);
    const Vec2 y = random_vec(rng);
    double c = scale(rng);
    if (c == 0.0) c = 1.0;
    const double base = lyj_expr(s, xi, eta, x, y);
    CHECK(lyj_expr(s, xi, eta, c * x, c * y) == Approx(base).epsilon(1e-12));
    const double k = std::fabs(c) + 0.01;
    CHECK(lyj_expr(s, k * xi, k * eta, x, y) == Approx(base).epsilon(1e-12));
    CHECK(cnj_expr(s, x, y) == Approx(lyj_expr(s, 1.0, 1.0, x, y)).epsilon(1e-14));
  }
}

TEST_CASE("evaluate dispatches by kind") {
  const auto bf = SpaceSpec::banas_fraczek(2.0);
  const auto [x, y] = corners(2.0);
  CHECK(evaluate(bf, {.kind = ConstantKind::CNJ}, x, y) == cnj_expr(bf, x, y));
  CHECK(evaluate(bf, {.kind = ConstantKind::LYJ, .xi = 2.0, .eta = 0.5}, x, y) == lyj_expr(bf, 2.0, 0.5, x, y));
  CHECK(evaluate(bf, {.kind = ConstantKind::JamesType, .t_mean = 3.0, .tau = 0.5}, x, y) ==
        james_type_expr(bf, 3.0, 0.5, x, y));
}

}  // TEST_SUITE
