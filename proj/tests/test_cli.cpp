#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "geoconst/cli.hpp"
#include "geoconst/numeric_text.hpp"

using namespace geoconst;
using doctest::Approx;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "geoconst");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> lines(const std::string& s) {
  auto v = split(s, '\n');
  if (!v.empty() && v.back().empty()) v.pop_back();
  return v;
}

const std::vector<std::string> kCoarse = {"--grid", "96", "--scale-grid", "17", "--refine-iters", "40"};

std::vector<std::string> with_coarse(std::vector<std::string> a) {
  a.insert(a.end(), kCoarse.begin(), kCoarse.end());
  return a;
}

struct EnvGuard {
  EnvGuard() { unsetenv("GEOCONST_THREADS"); }
  ~EnvGuard() { unsetenv("GEOCONST_THREADS"); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute csv output") {
  EnvGuard env;
  const auto r = run_cli({"compute", "--space", "bf:lambda=2", "--constant", "lyj", "--xi", "1", "--eta", "1"});
  CHECK(r.code == cli::kOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == cli::compute_csv_header());
  const auto f = split(ls[1], ',');
  REQUIRE(f.size() == 12);
  CHECK(f[0] == "bf:lambda=2");
  CHECK(f[1] == "lyj");
  CHECK(f[2] == "xi=1;eta=1");
  CHECK(parse_number(f[3]).value() == Approx(1.75).epsilon(1e-6));
  CHECK((f[10] == "scale_y" || f[10] == "scale_x"));
}

TEST_CASE("compute json output") {
  EnvGuard env;
  const auto r = run_cli(with_coarse({"compute", "--space", "gbf:lambda=2,p=3", "--constant", "james-type",
                                      "--t-mean", "2.5", "--tau", "0.5", "--format", "json"}));
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["space"] == "gbf:lambda=2,p=3");
  CHECK(doc["constant"] == "james-type");
  CHECK(doc["params"]["t_mean"] == 2.5);
  CHECK(doc["params"]["tau"] == 0.5);
  CHECK(doc["value"].is_number());
  for (const char* k : {"x", "y", "t", "radius_x", "theta_x", "theta_y", "branch"}) {
    CHECK(doc["witness"].contains(k));
  }
  CHECK(doc["closed_form"].is_null());
  CHECK(doc["abs_diff"].is_null());
  CHECK(doc["evaluations"].get<long long>() > 0);
  CHECK_FALSE(doc.contains("status"));
}

TEST_CASE("verify pass, json and fail") {
  EnvGuard env;
  const auto pass = run_cli({"verify", "--space", "bf:lambda=5", "--constant", "cnj"});
  CHECK(pass.code == cli::kOk);
  const auto ls = lines(pass.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == cli::verify_csv_header());
  const auto f = split(ls[1], ',');
  REQUIRE(f.size() == 9);
  CHECK(f[4] == "1.96");
  CHECK(f[6] == "0.001");
  CHECK(f[7] == "PASS");

  const auto js = run_cli(with_coarse({"verify", "--space", "bf:lambda=2", "--constant", "lyj", "--xi", "3",
                                       "--format", "json"}));
  CHECK(js.code == cli::kOk);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["status"] == "PASS");
  CHECK(doc["closed_form"].get<double>() == Approx(1.45));
  CHECK(doc["tol"] == 0.001);

  // A zero tolerance cannot be met with a coarse lattice and no refinement.
  const auto fail = run_cli({"verify", "--space", "bf:lambda=2", "--constant", "lyj", "--grid", "7",
                             "--scale-grid", "3", "--refine-iters", "0", "--tol", "0"});
  CHECK(fail.code == cli::kVerifyFailed);
  CHECK(split(lines(fail.out).at(1), ',').at(7) == "FAIL");
}

TEST_CASE("usage errors exit 2") {
  EnvGuard env;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"compute", "--constant", "lyj"},
           {"compute", "--space", "bf:lambda=0.5", "--constant", "lyj"},
           {"compute", "--space", "bf:lambda=2", "--constant", "nope"},
           {"compute", "--space", "bf:lambda=2", "--constant", "lyj", "--xi", "-1"},
           {"compute", "--space", "bf:lambda=2", "--constant", "lyj", "--grid", "0"},
           {"compute", "--space", "bf:lambda=2", "--constant", "lyj", "--format", "xml"},
           {"verify", "--space", "bf:lambda=2", "--constant", "james"},
           {"verify", "--space", "gbf:lambda=2,p=3", "--constant", "cnjp"},
           {"verify", "--space", "bf:lambda=1.05", "--constant", "cnjp"},
           {"verify", "--space", "gbf:lambda=2,p=3", "--constant", "james-type", "--t-mean", "2"},
           {"sweep", "--space-template", "bf:lambda=2", "--constant", "cnj", "--lambda-from", "1",
            "--lambda-to", "2", "--lambda-steps", "3"},
           {"lemma-check", "--lemma", "1", "--lambda", "1.2"},
           {"lemma-check", "--lemma", "3", "--lambda", "2"},
           {"wns-region", "--xi", "1", "--eta", "2"},
       }) {
    const auto r = run_cli(args);
    CHECK(r.code == cli::kUsage);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("domain errors write nothing to stdout") {
  EnvGuard env;
  const auto r = run_cli({"lemma-check", "--lemma", "2", "--lambda", "1.5"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.out.empty());
}

TEST_CASE("numeric failure exits 3") {
  EnvGuard env;
  const auto r = run_cli(with_coarse({"compute", "--space", "bf:lambda=2", "--constant", "cnjp", "--p-exp", "2000"}));
  CHECK(r.code == cli::kNumericFailure);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("sweep to stdout and to a file") {
  EnvGuard env;
  const auto r = run_cli({"sweep", "--space-template", "bf:lambda={lambda}", "--constant", "cnj", "--lambda-from",
                          "1", "--lambda-to", "3", "--lambda-steps", "5", "--grid", "96", "--scale-grid", "17"});
  REQUIRE(r.code == cli::kOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == cli::sweep_csv_header());
  const double expected[] = {1.0, 1.0 + 1.0 - 1.0 / 2.25, 1.75, 2.0 - 1.0 / 6.25, 2.0 - 1.0 / 9.0};
  for (int k = 0; k < 5; ++k) {
    const auto f = split(ls[k + 1], ',');
    REQUIRE(f.size() == 7);
    CHECK(parse_number(f[4]).value() == Approx(expected[k]).epsilon(1e-4));
    CHECK(parse_number(f[5]).value() == Approx(expected[k]).epsilon(1e-11));
  }

  const auto path = std::filesystem::temp_directory_path() / "geoconst_sweep_test.csv";
  const auto rf = run_cli({"sweep", "--space-template", "bf:lambda={lambda}", "--constant", "cnj",
                           "--lambda-from", "1", "--lambda-to", "3", "--lambda-steps", "5", "--grid", "96",
                           "--scale-grid", "17", "--out", path.string()});
  CHECK(rf.code == cli::kOk);
  CHECK(rf.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.out);
  std::filesystem::remove(path);

  const auto bad = run_cli({"sweep", "--space-template", "bf:lambda={lambda}", "--constant", "cnj",
                            "--lambda-from", "1", "--lambda-to", "2", "--lambda-steps", "2", "--out",
                            "/nonexistent-dir/x/out.csv"});
  CHECK(bad.code == cli::kIoFailure);
}

TEST_CASE("lemma-check output") {
  EnvGuard env;
  const auto ok = run_cli({"lemma-check", "--lemma", "1", "--lambda", "2", "--grid-n", "101"});
  CHECK(ok.code == cli::kOk);
  const auto ls = lines(ok.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "lemma,function,status,argmax_x,argmax_y,lattice_max,corner_value,reference,margin");
  CHECK(ls[1].rfind("1,lhs,PASS,", 0) == 0);

  const auto two = run_cli({"lemma-check", "--lemma", "2", "--lambda", "1.05", "--t", "1", "--xi", "2", "--eta",
                            "3"});
  CHECK(two.code == cli::kVerifyFailed);
  const auto l2 = lines(two.out);
  REQUIRE(l2.size() == 3);
  CHECK(l2[1].rfind("2,f,FAIL,", 0) == 0);
  CHECK(l2[2].rfind("2,g,", 0) == 0);
}

TEST_CASE("wns-region output") {
  EnvGuard env;
  const auto r = run_cli({"wns-region", "--xi", "1", "--eta", "1", "--lambda-from", "1", "--lambda-to", "2",
                          "--lambda-steps", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.err == "threshold=1.15470053838\n");
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "lambda,lyj,bound,holds");
  CHECK(ls[1] == "1,1,1.25,true");
  CHECK(ls[3] == "2,1.75,1.25,false");
}

TEST_CASE("GEOCONST_THREADS") {
  EnvGuard env;
  CHECK(cli::threads_from_env() == 1);
  setenv("GEOCONST_THREADS", "0", 1);
  CHECK(cli::threads_from_env() == 0);
  setenv("GEOCONST_THREADS", "3", 1);
  CHECK(cli::threads_from_env() == 3);
  const auto three = run_cli(with_coarse({"compute", "--space", "bf:lambda=1.5", "--constant", "lyj", "--xi", "2"}));
  unsetenv("GEOCONST_THREADS");
  const auto one = run_cli(with_coarse({"compute", "--space", "bf:lambda=1.5", "--constant", "lyj", "--xi", "2"}));
  CHECK(three.code == cli::kOk);
  CHECK(three.out == one.out);
  for (const char* bad : {"-1", "two", "1.5"}) {
    setenv("GEOCONST_THREADS", bad, 1);
    const auto r = run_cli({"compute", "--space", "bf:lambda=2", "--constant", "cnj"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("GEOCONST_THREADS") != std::string::npos);
  }
}

TEST_CASE("csv rows round-trip to 12 significant digits") {
  EnvGuard env;
  const auto r = run_cli(with_coarse({"compute", "--space", "bf:lambda=1.7", "--constant", "lyj", "--xi", "0.3",
                                      "--eta", "2.1"}));
  const auto f = split(lines(r.out).at(1), ',');
  for (int i : {3, 4, 5, 6, 7, 8, 9}) {
    const double v = parse_number(f[i]).value();
    CHECK(format_number(v) == f[i]);
  }
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::format_params({.kind = ConstantKind::CNJ}).empty());
  CHECK(cli::format_params({.kind = ConstantKind::JamesLambdaMu, .lam = 0.25, .mu = 0.5}) == "lam=0.25;mu=0.5");
}

}  // TEST_SUITE
