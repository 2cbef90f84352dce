#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geoconst/properties.hpp"
#include "geoconst/sup_search.hpp"

namespace geoconst::cli {

/// Process exit codes of the geoconst tool.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNumericFailure = 3,
  kIoFailure = 4,
};

/// Runs one command line (args[0] is the program name). Data goes to `out`,
/// diagnostics to `err`. Never throws; returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads GEOCONST_THREADS (0 = auto). Unset yields 1. Throws
/// ParameterDomainError on a value that is not a nonnegative integer.
int threads_from_env();

// Record rendering, shared with the tests.

/// RFC-4180 field quoting (quotes fields containing , " CR or LF).
std::string csv_field(const std::string& text);

/// "xi=1;eta=2": the query parameters read by its kind.
std::string format_params(const ConstantQuery& q);

std::string compute_csv_header();
std::string compute_csv_row(const ComputationResult& r);
std::string verify_csv_header();
std::string verify_csv_row(const ComputationResult& r, double tol);
std::string sweep_csv_header();
std::string region_csv_header();
std::string region_csv_row(const RegionRow& row);

/// One JSON document; `tol` adds the verify-only "tol" and "status" fields.
std::string result_json(const ComputationResult& r, const double* tol = nullptr);

}  // namespace geoconst::cli
