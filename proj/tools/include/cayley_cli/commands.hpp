#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley/classify.hpp"
#include "cayley/oracle.hpp"
#include "cayley/planar.hpp"
#include "cayley_cli/report.hpp"

namespace cayley::cli {

using intlat::Int;

struct CommandOptions {
  oracle::OracleOptions oracle;
  classify::ClassifyOptions classify;
  bool timings = true;
};

// Each command catches library errors and records them in the report with
// the matching exit code.
Report cmd_classify(const std::string& matrix_text, const CommandOptions& options = {});
Report cmd_verify(const std::string& matrix_text, const CommandOptions& options = {});
Report cmd_planar(const std::string& vector_text, const CommandOptions& options = {});

// Same, for already-parsed input.
Report classify_matrix(const intlat::IntMatrix& m, const CommandOptions& options = {});
Report verify_matrix(const intlat::IntMatrix& m, const CommandOptions& options = {});

int exit_code_for(const std::exception& e);
std::string error_kind(const std::exception& e);

enum class SweepShape { kColumn, k3x2, k4x2, kTriTriangle };

struct SweepOptions {
  SweepShape shape = SweepShape::k4x2;
  std::size_t column_rows = 1;  // for kColumn
  Int bound = 1;                // entries in [-bound, bound]
  bool oracle = false;
  std::size_t sample = 0;       // oracle on this many random instances; 0: all
  std::uint64_t seed = 1;
  bool dedupe = false;
  bool keep_reports = false;    // fill SweepSummary::reports
  unsigned threads = 0;         // 0: hardware concurrency
  CommandOptions command;
};

// Parses "Nx1" (N <= 5), "3x2", "4x2" or "tri".
SweepOptions parse_shape(const std::string& shape);

struct SweepSummary {
  std::size_t enumerated = 0;
  std::size_t filtered = 0;    // fail the shape's preconditions
  std::size_t duplicates = 0;  // skipped by dedupe
  std::size_t classified = 0;
  std::map<std::string, std::size_t> outcomes;  // loops, chi2.., unsupported, error
  std::map<std::string, std::size_t> statuses;  // oracle statuses
  std::size_t oracle_runs = 0;
  std::size_t budget_exceeded = 0;
  std::vector<Report> violations;  // verbatim, input order
  std::vector<Report> reports;     // with keep_reports, input order
  int exit_code = kExitOk;
};

SweepSummary cmd_sweep(const SweepOptions& options);
nlohmann::json to_json(const SweepSummary& s, const SweepOptions& options);

}  // namespace cayley::cli
