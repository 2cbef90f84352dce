#include "geoconst/sup_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "geoconst/closed_forms.hpp"
#include "geoconst/error.hpp"
#include "geoconst/numeric_text.hpp"

namespace geoconst {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Hard stop for pattern search moves, independent of refine_iters.
constexpr int kMaxRefineMoves = 100000;

enum class Domain { Scaled, Sphere, Ball };

Domain domain_for(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::LYJ:
    case ConstantKind::CNJ:
    case ConstantKind::CNJP:
      return Domain::Scaled;
    case ConstantKind::LYJPrime:
    case ConstantKind::James:
    case ConstantKind::JamesType:
      return Domain::Sphere;
    case ConstantKind::JamesLambdaMu:
      return Domain::Ball;
  }
  return Domain::Scaled;
}

int dims_for(Domain d) {
  switch (d) {
    case Domain::Scaled:
      return 3;
    case Domain::Sphere:
      return 2;
    case Domain::Ball:
      return 4;
  }
  return 0;
}

double wrap_angle(double theta) {
  double w = std::fmod(theta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a value just below 0 can round up to exactly 2π.
  if (w >= kTwoPi) w = 0.0;
  return w;
}

/// Calls `fn` with a concrete kernel for `q.kind`, so inner loops are
/// instantiated per functional instead of switching on every evaluation.
template <typename Fn>
decltype(auto) with_kernel(const SpaceSpec& s, const ConstantQuery& q, Fn&& fn) {
  switch (q.kind) {
    case ConstantKind::LYJ:
      return fn([&](Vec2 x, Vec2 y) { return detail::lyj_kernel(s, q.xi, q.eta, x, y); });
    case ConstantKind::LYJPrime:
      return fn([&](Vec2 x, Vec2 y) { return detail::lyj_prime_kernel(s, q.xi, q.eta, x, y); });
    case ConstantKind::CNJ:
      return fn([&](Vec2 x, Vec2 y) { return detail::cnj_kernel(s, x, y); });
    case ConstantKind::CNJP:
      return fn([&](Vec2 x, Vec2 y) { return detail::cnjp_kernel(s, q.p_exp, x, y); });
    case ConstantKind::James:
      return fn([&](Vec2 x, Vec2 y) { return detail::james_kernel(s, x, y); });
    case ConstantKind::JamesLambdaMu:
      return fn([&](Vec2 x, Vec2 y) { return detail::james_lm_kernel(s, q.lam, q.mu, x, y); });
    case ConstantKind::JamesType:
      break;
  }
  return fn([&](Vec2 x, Vec2 y) { return detail::james_type_kernel(s, q.t_mean, q.tau, x, y); });
}

/// A search point in parameter coordinates:
/// (θ₁, θ₂) for Sphere, (θ₁, θ₂, t) for Scaled, (θ₁, θ₂, t, r) for Ball.
struct Coords {
  std::array<double, 4> c{0.0, 0.0, 1.0, 1.0};
  Branch branch = Branch::ScaleY;
};

Witness to_witness(const SpaceSpec& s, Domain dom, const Coords& p, double value) {
  Witness w;
  w.theta_x = p.c[0];
  w.theta_y = p.c[1];
  w.x = detail::unit_vector_unchecked(s, p.c[0]);
  w.y = detail::unit_vector_unchecked(s, p.c[1]);
  w.branch = p.branch;
  w.t = dom == Domain::Sphere ? 1.0 : p.c[2];
  w.radius_x = dom == Domain::Ball ? p.c[3] : 1.0;
  w.value = value;
  return w;
}

Coords from_witness(Domain dom, const Witness& w) {
  Coords p;
  p.c = {wrap_angle(w.theta_x), wrap_angle(w.theta_y), dom == Domain::Sphere ? 1.0 : w.t,
         dom == Domain::Ball ? w.radius_x : 1.0};
  p.branch = dom == Domain::Scaled ? w.branch : Branch::ScaleY;
  return p;
}

[[noreturn]] void numeric_failure(const SpaceSpec& s, const ConstantQuery& q, Vec2 x, Vec2 y,
                                  double v) {
  throw NumericFailureError(std::string(constant_name(q.kind)) + " on " + format_space(s) +
                            " evaluated to " + format_number(v) + " at x=(" + format_number(x.a) +
                            "," + format_number(x.b) + "), y=(" + format_number(y.a) + "," +
                            format_number(y.b) + ")");
}

// ---------------------------------------------------------------------------
// Lattice scan

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t key = 0;
  Coords coords;
};

/// Strict order used for the argmax: larger value first, then smaller key.
bool better(const Candidate& a, const Candidate& b) {
  return a.value > b.value || (a.value == b.value && a.key < b.key);
}

/// Keeps the K best candidates under `better`, sorted best first.
class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) { items_.reserve(k + 1); }

  /// Cheap pre-filter. Within one worker keys are visited in increasing
  /// order, so an equal value can never displace a kept candidate.
  [[nodiscard]] bool wants(double v) const { return items_.size() < k_ || v > items_.back().value; }

  void push(const Candidate& c) {
    auto pos = std::upper_bound(items_.begin(), items_.end(), c, better);
    items_.insert(pos, c);
    if (items_.size() > k_) items_.pop_back();
  }

  [[nodiscard]] const std::vector<Candidate>& items() const { return items_; }

 private:
  std::size_t k_;
  std::vector<Candidate> items_;
};

struct ScanPart {
  TopK top;
  std::int64_t evaluations = 0;
  bool failed = false;
  Vec2 bad_x, bad_y;
  double bad_value = 0.0;

  explicit ScanPart(std::size_t k) : top(k) {}
};

struct Lattice {
  std::vector<double> angles;
  std::vector<Vec2> units;
  std::vector<double> scales;  // empty for Sphere
};

Lattice make_lattice(const SpaceSpec& s, Domain dom, const SearchConfig& cfg) {
  Lattice lat;
  const int n = dom == Domain::Ball ? cfg.ball_angle_grid_n() : cfg.angle_grid_n;
  lat.angles.resize(static_cast<std::size_t>(n));
  lat.units.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    lat.angles[i] = kTwoPi * i / n;
    lat.units[i] = detail::unit_vector_unchecked(s, lat.angles[i]);
  }
  if (dom != Domain::Sphere) {
    const int m = dom == Domain::Ball ? cfg.ball_radius_grid_n() : cfg.scale_grid_n;
    lat.scales.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) lat.scales[k] = m == 1 ? 1.0 : static_cast<double>(k) / (m - 1);
    lat.scales.back() = 1.0;
  }
  return lat;
}

/// Scans first-angle indices [i_begin, i_end) in key order.
template <typename Kernel>
void scan_rows(Domain dom, const Lattice& lat, Kernel&& kernel, int i_begin, int i_end,
               ScanPart& part) {
  const auto n = static_cast<std::uint64_t>(lat.units.size());
  const auto m = static_cast<std::uint64_t>(lat.scales.size());

  auto visit = [&](double v, std::uint64_t key, Vec2 x, Vec2 y, auto&& coords) {
    if (!std::isfinite(v)) {
      if (!part.failed) {
        part.failed = true;
        part.bad_x = x;
        part.bad_y = y;
        part.bad_value = v;
      }
      return;
    }
    if (part.top.wants(v)) part.top.push(Candidate{v, key, coords()});
  };

  for (int i = i_begin; i < i_end && !part.failed; ++i) {
    const Vec2 ui = lat.units[i];
    for (std::uint64_t j = 0; j < n; ++j) {
      const Vec2 uj = lat.units[j];
      const std::uint64_t ij = static_cast<std::uint64_t>(i) * n + j;
      switch (dom) {
        case Domain::Sphere: {
          visit(kernel(ui, uj), ij, ui, uj, [&] {
            Coords p;
            p.c = {lat.angles[i], lat.angles[j], 1.0, 1.0};
            return p;
          });
          ++part.evaluations;
          break;
        }
        case Domain::Scaled: {
          for (std::uint64_t k = 0; k < m; ++k) {
            const double t = lat.scales[k];
            const Vec2 ty = t * uj;
            const Vec2 tx = t * ui;
            const std::uint64_t base = (ij * m + k) * 2;
            visit(kernel(ui, ty), base, ui, ty, [&] {
              Coords p;
              p.c = {lat.angles[i], lat.angles[j], t, 1.0};
              p.branch = Branch::ScaleY;
              return p;
            });
            visit(kernel(tx, uj), base + 1, tx, uj, [&] {
              Coords p;
              p.c = {lat.angles[i], lat.angles[j], t, 1.0};
              p.branch = Branch::ScaleX;
              return p;
            });
          }
          part.evaluations += static_cast<std::int64_t>(2 * m);
          break;
        }
        case Domain::Ball: {
          for (std::uint64_t k = 0; k < m; ++k) {
            const Vec2 ty = lat.scales[k] * uj;
            for (std::uint64_t r = 0; r < m; ++r) {
              const Vec2 rx = lat.scales[r] * ui;
              visit(kernel(rx, ty), (ij * m + k) * m + r, rx, ty, [&] {
                Coords p;
                p.c = {lat.angles[i], lat.angles[j], lat.scales[k], lat.scales[r]};
                return p;
              });
            }
          }
          part.evaluations += static_cast<std::int64_t>(m * m);
          break;
        }
      }
    }
  }
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ScanOutcome {
  std::vector<Candidate> best;  // best first
  std::int64_t evaluations = 0;
};

ScanOutcome scan_lattice(const SpaceSpec& s, const ConstantQuery& q, Domain dom,
                         const Lattice& lat, const SearchConfig& cfg) {
  const int rows = static_cast<int>(lat.units.size());
  const int workers = std::clamp(resolve_threads(cfg.threads), 1, rows);
  const auto k = static_cast<std::size_t>(cfg.refine_starts);

  std::vector<ScanPart> parts(static_cast<std::size_t>(workers), ScanPart(k));
  auto run = [&](int w) {
    const int begin = static_cast<int>(static_cast<std::int64_t>(rows) * w / workers);
    const int end = static_cast<int>(static_cast<std::int64_t>(rows) * (w + 1) / workers);
    with_kernel(s, q, [&](auto kernel) { scan_rows(dom, lat, kernel, begin, end, parts[w]); });
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  ScanOutcome out;
  TopK merged(k);
  for (const ScanPart& part : parts) {
    // Parts cover increasing rows, so the first failing part holds the
    // failure with the smallest key.
    if (part.failed) numeric_failure(s, q, part.bad_x, part.bad_y, part.bad_value);
    out.evaluations += part.evaluations;
    for (const Candidate& c : part.top.items()) {
      if (merged.items().size() < k || better(c, merged.items().back())) merged.push(c);
    }
  }
  out.best = merged.items();
  return out;
}

// ---------------------------------------------------------------------------
// Pattern search

template <typename Kernel>
struct Objective {
  const SpaceSpec& space;
  const ConstantQuery& query;
  Domain dom;
  Kernel kernel;
  std::int64_t evaluations = 0;

  double operator()(const Coords& p) {
    const Vec2 ux = detail::unit_vector_unchecked(space, p.c[0]);
    const Vec2 uy = detail::unit_vector_unchecked(space, p.c[1]);
    Vec2 x = ux;
    Vec2 y = uy;
    switch (dom) {
      case Domain::Sphere:
        break;
      case Domain::Scaled:
        if (p.branch == Branch::ScaleY) {
          y = p.c[2] * uy;
        } else {
          x = p.c[2] * ux;
        }
        break;
      case Domain::Ball:
        x = p.c[3] * ux;
        y = p.c[2] * uy;
        break;
    }
    ++evaluations;
    const double v = kernel(x, y);
    if (!std::isfinite(v)) numeric_failure(space, query, x, y, v);
    return v;
  }
};

std::array<double, 4> initial_steps(Domain dom, const SearchConfig& cfg) {
  const bool ball = dom == Domain::Ball;
  const int n = ball ? cfg.ball_angle_grid_n() : cfg.angle_grid_n;
  const int m = ball ? cfg.ball_radius_grid_n() : cfg.scale_grid_n;
  const double angle_cell = kTwoPi / n;
  const double scale_cell = 1.0 / std::max(m - 1, 1);
  const double c = cfg.initial_step_cells;
  return {c * angle_cell, c * angle_cell, c * scale_cell, c * scale_cell};
}

/// All offsets in {−1, 0, 1}^d except zero, in a fixed order.
std::vector<std::array<int, 4>> neighbor_offsets(int d) {
  std::vector<std::array<int, 4>> out;
  int total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::array<int, 4> o{0, 0, 0, 0};
    int rest = code;
    bool zero = true;
    for (int i = 0; i < d; ++i) {
      o[i] = rest % 3 - 1;
      rest /= 3;
      zero = zero && o[i] == 0;
    }
    if (!zero) out.push_back(o);
  }
  return out;
}

template <typename Kernel>
std::pair<Coords, double> pattern_search(Objective<Kernel>& f, Coords start, double start_value,
                                         const SearchConfig& cfg) {
  const int d = dims_for(f.dom);
  const auto offsets = neighbor_offsets(d);
  auto step = initial_steps(f.dom, cfg);

  Coords cur = start;
  double cur_v = start_value;
  int reductions = 0;
  for (int moves = 0; reductions < cfg.refine_iters && moves < kMaxRefineMoves; ++moves) {
    Coords best = cur;
    double best_v = cur_v;
    for (const auto& o : offsets) {
      Coords trial = cur;
      bool moved = false;
      for (int i = 0; i < d; ++i) {
        if (o[i] == 0) continue;
        double v = cur.c[i] + o[i] * step[i];
        v = i < 2 ? wrap_angle(v) : std::clamp(v, 0.0, 1.0);
        moved = moved || v != cur.c[i];
        trial.c[i] = v;
      }
      if (!moved) continue;
      const double v = f(trial);
      if (v > best_v) {
        best_v = v;
        best = trial;
      }
    }
    if (best_v > cur_v) {
      cur = best;
      cur_v = best_v;
    } else {
      for (int i = 0; i < d; ++i) step[i] *= cfg.refine_shrink;
      ++reductions;
    }
  }
  return {cur, cur_v};
}

Domain validated_domain(const SpaceSpec& space, const ConstantQuery& query,
                        const SearchConfig& cfg) {
  space.validate();
  query.validate();
  cfg.validate();
  return domain_for(query.kind);
}

}  // namespace

void SearchConfig::validate() const {
  if (angle_grid_n < 1 || scale_grid_n < 1 || refine_starts < 1) {
    throw ParameterDomainError("search lattice sizes and refine starts must be >= 1");
  }
  if (refine_iters < 0) throw ParameterDomainError("refine iterations must be >= 0");
  if (!(refine_shrink > 0.0 && refine_shrink < 1.0)) {
    throw ParameterDomainError("refine shrink must lie in (0,1)");
  }
  if (!(std::isfinite(initial_step_cells) && initial_step_cells > 0.0)) {
    throw ParameterDomainError("initial step must be > 0");
  }
  if (threads < 0) throw ParameterDomainError("thread count must be >= 0");
  if (!(accept_tol >= 0.0)) throw ParameterDomainError("acceptance tolerance must be >= 0");
}

int SearchConfig::ball_angle_grid_n() const { return std::max(8, angle_grid_n / 4); }

int SearchConfig::ball_radius_grid_n() const { return std::max(2, (scale_grid_n - 1) / 4 + 1); }

Witness make_witness(const SpaceSpec& space, const ConstantQuery& query, double theta_x,
                     double theta_y, double t, Branch branch, double radius_x) {
  space.validate();
  query.validate();
  if (!(t >= 0.0 && t <= 1.0 && radius_x >= 0.0 && radius_x <= 1.0)) {
    throw ParameterDomainError("witness scale factors must lie in [0,1]");
  }
  Witness w;
  w.theta_x = theta_x;
  w.theta_y = theta_y;
  w.x = unit_vector(space, theta_x);
  w.y = unit_vector(space, theta_y);
  w.t = t;
  w.branch = branch;
  w.radius_x = radius_x;
  w.value = evaluate(space, query, w.point_x(), w.point_y());
  return w;
}

Witness refine_local(const SpaceSpec& space, const ConstantQuery& query, const Witness& start,
                     const SearchConfig& cfg) {
  const Domain dom = validated_domain(space, query, cfg);
  return with_kernel(space, query, [&](auto kernel) {
    Objective<decltype(kernel)> f{space, query, dom, kernel};
    const Coords p = from_witness(dom, start);
    const double v0 = f(p);
    auto [best, best_v] = pattern_search(f, p, v0, cfg);
    return to_witness(space, dom, best, best_v);
  });
}

ComputationResult compute_constant(const SpaceSpec& space, const ConstantQuery& query,
                                   const SearchConfig& cfg) {
  const Domain dom = validated_domain(space, query, cfg);

  ComputationResult result;
  result.query = query;
  result.space = space;

  if (query.kind == ConstantKind::JamesType && query.tau == 0.0) {
    // μ_t(‖x‖, ‖x‖) = 1 on the sphere.
    Coords p;
    result.witness = to_witness(space, dom, p, 1.0);
    result.value = 1.0;
    result.grid_value = 1.0;
    return result;
  }

  const Lattice lat = make_lattice(space, dom, cfg);
  const ScanOutcome scan = scan_lattice(space, query, dom, lat, cfg);
  result.evaluations = scan.evaluations;
  result.grid_value = scan.best.front().value;

  with_kernel(space, query, [&](auto kernel) {
    Objective<decltype(kernel)> f{space, query, dom, kernel};
    Coords best = scan.best.front().coords;
    double best_v = scan.best.front().value;
    for (const Candidate& c : scan.best) {
      auto [p, v] = pattern_search(f, c.coords, c.value, cfg);
      if (v > best_v) {
        best = p;
        best_v = v;
      }
    }
    result.value = best_v;
    result.witness = to_witness(space, dom, best, best_v);
    result.evaluations += f.evaluations;
  });
  return result;
}

ComputationResult verify_against_closed_form(const SpaceSpec& space, const ConstantQuery& query,
                                             const SearchConfig& cfg) {
  const auto closed = lookup_closed_form(space, query);
  if (!closed) {
    throw UnsupportedCombinationError("no closed form encoded for " +
                                      std::string(constant_name(query.kind)) + " on " +
                                      format_space(space));
  }
  ComputationResult result = compute_constant(space, query, cfg);
  result.closed_form = *closed;
  result.abs_diff = std::fabs(result.value - *closed);
  result.agrees = *result.abs_diff <= cfg.accept_tol;
  return result;
}

}  // namespace geoconst
