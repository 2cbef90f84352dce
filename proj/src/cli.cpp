#include "geoconst/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "geoconst/closed_forms.hpp"
#include "geoconst/error.hpp"
#include "geoconst/lemma_kernels.hpp"
#include "geoconst/numeric_text.hpp"

namespace geoconst::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string num(double v) { return format_number(v); }

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::string branch_name(Branch b) { return b == Branch::ScaleY ? "scale_y" : "scale_x"; }

/// Rounds to the printed precision so JSON numbers carry 12 significant digits.
double rounded(double v) { return parse_number(num(v)).value_or(v); }

struct QueryFlags {
  std::string constant;
  ConstantQuery query;
  SearchConfig cfg;
  std::string format = "csv";
};

void add_query_flags(CLI::App& cmd, QueryFlags& f) {
  cmd.add_option("--constant", f.constant,
                 "lyj | lyj-prime | cnj | cnjp | james | james-lm | james-type")
      ->required();
  cmd.add_option("--xi", f.query.xi, "xi for lyj / lyj-prime");
  cmd.add_option("--eta", f.query.eta, "eta for lyj / lyj-prime");
  cmd.add_option("--p-exp", f.query.p_exp, "exponent of cnjp");
  cmd.add_option("--t-mean", f.query.t_mean, "power-mean order of james-type");
  cmd.add_option("--tau", f.query.tau, "tau of james-type");
  cmd.add_option("--lam", f.query.lam, "lambda coefficient of james-lm");
  cmd.add_option("--mu", f.query.mu, "mu coefficient of james-lm");
  cmd.add_option("--grid", f.cfg.angle_grid_n, "angle lattice size")->check(CLI::PositiveNumber);
  cmd.add_option("--scale-grid", f.cfg.scale_grid_n, "scale lattice size")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--refine-iters", f.cfg.refine_iters, "pattern-search step reductions")
      ->check(CLI::NonNegativeNumber);
}

void add_format_flag(CLI::App& cmd, QueryFlags& f) {
  cmd.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

/// Resolves the constant name and the thread hint; validation happens in the library.
void finish_flags(QueryFlags& f) {
  f.query.kind = parse_constant_kind(f.constant);
  f.cfg.threads = threads_from_env();
}

int cmd_compute(const std::string& space_text, QueryFlags& f, std::ostream& out) {
  finish_flags(f);
  const SpaceSpec space = parse_space(space_text);
  const ComputationResult r = compute_constant(space, f.query, f.cfg);
  if (f.format == "json") {
    out << result_json(r) << '\n';
  } else {
    out << compute_csv_header() << '\n' << compute_csv_row(r) << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& space_text, QueryFlags& f, double tol, std::ostream& out) {
  finish_flags(f);
  f.cfg.accept_tol = tol;
  const SpaceSpec space = parse_space(space_text);
  const ComputationResult r = verify_against_closed_form(space, f.query, f.cfg);
  if (f.format == "json") {
    out << result_json(r, &tol) << '\n';
  } else {
    out << verify_csv_header() << '\n' << verify_csv_row(r, tol) << '\n';
  }
  return r.agrees.value_or(false) ? kOk : kVerifyFailed;
}

struct SweepFlags {
  std::string space_template;
  double from = 1.0;
  double to = 2.0;
  int steps = 5;
  std::string out_path = "-";
};

std::string substitute_lambda(const std::string& tmpl, const std::string& value) {
  static const std::string kPlaceholder = "{lambda}";
  const auto pos = tmpl.find(kPlaceholder);
  if (pos == std::string::npos) {
    throw ParameterDomainError("--space-template must contain {lambda}");
  }
  std::string s = tmpl;
  s.replace(pos, kPlaceholder.size(), value);
  return s;
}

std::optional<double> closed_form_if_any(const SpaceSpec& space, const ConstantQuery& q) {
  try {
    return lookup_closed_form(space, q);
  } catch (const ConditionNotMetError&) {
    return std::nullopt;
  } catch (const UnsupportedBranchError&) {
    return std::nullopt;
  }
}

int cmd_sweep(const SweepFlags& s, QueryFlags& f, std::ostream& out) {
  finish_flags(f);
  if (s.steps < 1) throw ParameterDomainError("--lambda-steps must be >= 1");
  if (!(std::isfinite(s.from) && std::isfinite(s.to) && s.to >= s.from)) {
    throw ParameterDomainError("--lambda-from must not exceed --lambda-to");
  }
  // Validate every space before opening the output or computing anything.
  std::vector<std::pair<std::string, SpaceSpec>> grid;
  for (int k = 0; k < s.steps; ++k) {
    const double lambda = s.steps == 1 ? s.from : s.from + (s.to - s.from) * k / (s.steps - 1);
    const std::string text = num(lambda);
    grid.emplace_back(text, parse_space(substitute_lambda(s.space_template, text)));
  }
  f.query.validate();

  std::ofstream file;
  std::ostream* sink = &out;
  if (s.out_path != "-") {
    file.open(s.out_path, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + s.out_path + "' for writing");
    sink = &file;
  }

  *sink << sweep_csv_header() << '\n';
  for (const auto& [lambda_text, space] : grid) {
    ComputationResult r = compute_constant(space, f.query, f.cfg);
    const auto closed = closed_form_if_any(space, f.query);
    *sink << lambda_text << ',' << constant_name(f.query.kind) << ',' << num(f.query.xi) << ','
          << num(f.query.eta) << ',' << num(r.value) << ',' << opt_num(closed) << ','
          << (closed ? num(std::fabs(r.value - *closed)) : std::string()) << '\n';
  }
  sink->flush();
  if (!*sink) throw IoError("write to '" + s.out_path + "' failed");
  return kOk;
}

struct LemmaFlags {
  int lemma = 1;
  double lambda = 0.0;
  double t = 1.0;
  double xi = 1.0;
  double eta = 1.0;
  int grid_n = 200;
};

void print_lattice_row(std::ostream& out, int lemma, const char* fn, const LatticeCheck& c) {
  out << lemma << ',' << fn << ',' << (c.passed ? "PASS" : "FAIL") << ',' << num(c.argmax.a) << ','
      << num(c.argmax.b) << ',' << num(c.lattice_max) << ',' << num(c.corner_value) << ','
      << num(c.reference) << ',' << num(c.margin) << '\n';
}

int cmd_lemma_check(const LemmaFlags& f, std::ostream& out) {
  constexpr const char* kHeader =
      "lemma,function,status,argmax_x,argmax_y,lattice_max,corner_value,reference,margin\n";
  if (f.lemma == 1) {
    const LatticeCheck c = lemma1_check(f.lambda, f.grid_n);
    out << kHeader;
    print_lattice_row(out, 1, "lhs", c);
    return c.passed ? kOk : kVerifyFailed;
  }
  const Lemma2Check c = lemma2_max_check({f.lambda, f.t, f.xi, f.eta}, f.grid_n);
  out << kHeader;
  print_lattice_row(out, 2, "f", c.f);
  print_lattice_row(out, 2, "g", c.g);
  return c.passed ? kOk : kVerifyFailed;
}

int cmd_wns_region(const RegionQuery& q, std::ostream& out, std::ostream& err) {
  const double threshold = wns_lambda_threshold(q.xi, q.eta);
  const auto rows = wns_region_scan(q);
  err << "threshold=" << num(threshold) << '\n';
  out << region_csv_header() << '\n';
  for (const RegionRow& row : rows) out << region_csv_row(row) << '\n';
  return kOk;
}

}  // namespace

int threads_from_env() {
  const char* raw = std::getenv("GEOCONST_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  const auto v = parse_number(raw);
  if (!v || *v < 0.0 || *v != std::floor(*v) || *v > 4096.0) {
    throw ParameterDomainError(std::string("GEOCONST_THREADS must be a nonnegative integer, got '") +
                               raw + "'");
  }
  return static_cast<int>(*v);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string q = "\"";
  for (char c : text) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::string format_params(const ConstantQuery& q) {
  switch (q.kind) {
    case ConstantKind::LYJ:
    case ConstantKind::LYJPrime:
      return "xi=" + num(q.xi) + ";eta=" + num(q.eta);
    case ConstantKind::CNJP:
      return "p_exp=" + num(q.p_exp);
    case ConstantKind::JamesLambdaMu:
      return "lam=" + num(q.lam) + ";mu=" + num(q.mu);
    case ConstantKind::JamesType:
      return "t_mean=" + num(q.t_mean) + ";tau=" + num(q.tau);
    case ConstantKind::CNJ:
    case ConstantKind::James:
      break;
  }
  return {};
}

std::string compute_csv_header() {
  return "space,constant,params,value,x_a,x_b,y_a,y_b,t,radius_x,branch,evaluations";
}

std::string compute_csv_row(const ComputationResult& r) {
  const Witness& w = r.witness;
  std::ostringstream s;
  s << csv_field(format_space(r.space)) << ',' << constant_name(r.query.kind) << ','
    << csv_field(format_params(r.query)) << ',' << num(r.value) << ',' << num(w.x.a) << ','
    << num(w.x.b) << ',' << num(w.y.a) << ',' << num(w.y.b) << ',' << num(w.t) << ','
    << num(w.radius_x) << ',' << branch_name(w.branch) << ',' << r.evaluations;
  return s.str();
}

std::string verify_csv_header() {
  return "space,constant,params,value,closed_form,abs_diff,tol,status,evaluations";
}

std::string verify_csv_row(const ComputationResult& r, double tol) {
  std::ostringstream s;
  s << csv_field(format_space(r.space)) << ',' << constant_name(r.query.kind) << ','
    << csv_field(format_params(r.query)) << ',' << num(r.value) << ',' << opt_num(r.closed_form)
    << ',' << opt_num(r.abs_diff) << ',' << num(tol) << ','
    << (r.agrees.value_or(false) ? "PASS" : "FAIL") << ',' << r.evaluations;
  return s.str();
}

std::string sweep_csv_header() { return "lambda,constant,xi,eta,value,closed_form,abs_diff"; }

std::string region_csv_header() { return "lambda,lyj,bound,holds"; }

std::string region_csv_row(const RegionRow& row) {
  return num(row.lambda) + ',' + num(row.lyj) + ',' + num(row.bound) + ',' +
         (row.holds ? "true" : "false");
}

std::string result_json(const ComputationResult& r, const double* tol) {
  using nlohmann::json;
  const ConstantQuery& q = r.query;
  json params = json::object();
  switch (q.kind) {
    case ConstantKind::LYJ:
    case ConstantKind::LYJPrime:
      params = {{"xi", rounded(q.xi)}, {"eta", rounded(q.eta)}};
      break;
    case ConstantKind::CNJP:
      params = {{"p_exp", rounded(q.p_exp)}};
      break;
    case ConstantKind::JamesLambdaMu:
      params = {{"lam", rounded(q.lam)}, {"mu", rounded(q.mu)}};
      break;
    case ConstantKind::JamesType:
      params = {{"t_mean", rounded(q.t_mean)}, {"tau", rounded(q.tau)}};
      break;
    case ConstantKind::CNJ:
    case ConstantKind::James:
      break;
  }
  const Witness& w = r.witness;
  json doc = {
      {"space", format_space(r.space)},
      {"constant", std::string(constant_name(q.kind))},
      {"params", params},
      {"value", rounded(r.value)},
      {"witness",
       {{"x", {rounded(w.x.a), rounded(w.x.b)}},
        {"y", {rounded(w.y.a), rounded(w.y.b)}},
        {"t", rounded(w.t)},
        {"radius_x", rounded(w.radius_x)},
        {"theta_x", rounded(w.theta_x)},
        {"theta_y", rounded(w.theta_y)},
        {"branch", branch_name(w.branch)}}},
      {"closed_form", r.closed_form ? json(rounded(*r.closed_form)) : json(nullptr)},
      {"abs_diff", r.abs_diff ? json(rounded(*r.abs_diff)) : json(nullptr)},
      {"evaluations", r.evaluations},
  };
  if (tol != nullptr) {
    doc["tol"] = rounded(*tol);
    doc["status"] = r.agrees.value_or(false) ? "PASS" : "FAIL";
  }
  return doc.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric constants of normed planes by numeric supremum search", "geoconst"};
  app.require_subcommand(1);

  std::string space_text;
  QueryFlags compute_flags;
  auto* compute = app.add_subcommand("compute", "Compute one constant numerically");
  compute->add_option("--space", space_text, "bf:lambda=L | gbf:lambda=L,p=P | lp:p=P")->required();
  add_query_flags(*compute, compute_flags);
  add_format_flag(*compute, compute_flags);

  QueryFlags verify_flags;
  double tol = 1e-3;
  auto* verify = app.add_subcommand("verify", "Compare a numeric value with its closed form");
  verify->add_option("--space", space_text, "bf:lambda=L | gbf:lambda=L,p=P | lp:p=P")->required();
  add_query_flags(*verify, verify_flags);
  add_format_flag(*verify, verify_flags);
  verify->add_option("--tol", tol, "acceptance tolerance on |value - closed form|")
      ->check(CLI::NonNegativeNumber);

  QueryFlags sweep_flags;
  SweepFlags sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Compute a constant over a range of lambda");
  sweep->add_option("--space-template", sweep_opts.space_template, "space with {lambda} placeholder")
      ->required();
  sweep->add_option("--lambda-from", sweep_opts.from)->required();
  sweep->add_option("--lambda-to", sweep_opts.to)->required();
  sweep->add_option("--lambda-steps", sweep_opts.steps)->required();
  sweep->add_option("--out", sweep_opts.out_path, "output path, - for stdout");
  add_query_flags(*sweep, sweep_flags);

  LemmaFlags lemma_opts;
  auto* lemma = app.add_subcommand("lemma-check", "Brute-force lattice check of a lemma");
  lemma->add_option("--lemma", lemma_opts.lemma)->required()->check(CLI::IsMember({1, 2}));
  lemma->add_option("--lambda", lemma_opts.lambda)->required();
  lemma->add_option("--t", lemma_opts.t);
  lemma->add_option("--xi", lemma_opts.xi);
  lemma->add_option("--eta", lemma_opts.eta);
  lemma->add_option("--grid-n", lemma_opts.grid_n);

  RegionQuery region;
  auto* wns = app.add_subcommand("wns-region", "Scan the weak-normal-structure condition over lambda");
  wns->add_option("--xi", region.xi)->required();
  wns->add_option("--eta", region.eta)->required();
  wns->add_option("--lambda-from", region.lambda_lo);
  wns->add_option("--lambda-to", region.lambda_hi);
  wns->add_option("--lambda-steps", region.samples);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(space_text, compute_flags, out);
    if (*verify) return cmd_verify(space_text, verify_flags, tol, out);
    if (*sweep) return cmd_sweep(sweep_opts, sweep_flags, out);
    if (*lemma) return cmd_lemma_check(lemma_opts, out);
    if (*wns) return cmd_wns_region(region, out, err);
  } catch (const NumericFailureError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace geoconst::cli
