#pragma once

// Machine-readable reports. emit() and parse() are inverse: parsing an
// emitted report gives back an equal Report.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/oracle.hpp"
#include "cayley/sacg.hpp"

namespace cayley::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitUnsupported = 3,
  kExitViolation = 4,
  kExitBudget = 5,
};

struct ErrorInfo {
  std::string kind;  // exception class, e.g. "ParseError"
  std::string message;
  friend bool operator==(const ErrorInfo&, const ErrorInfo&) = default;
};

struct Report {
  std::string command;
  nlohmann::json input;  // echo of what was classified
  std::optional<intlat::IntMatrix> relations;  // planar: relation lattice
  std::optional<sacg::ChromaticResult> result;
  std::optional<oracle::ChiBounds> bounds;
  std::optional<std::string> status;  // CONSISTENT, PINNED, VIOLATION, UNSUPPORTED
  std::string detail;
  std::optional<ErrorInfo> error;
  std::map<std::string, double> timings;  // seconds; empty with --no-timings
  int exit_code = kExitOk;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json matrix_to_json(const intlat::IntMatrix& m);
intlat::IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const sacg::Certificate& c);
sacg::Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const sacg::ChromaticResult& r);
sacg::ChromaticResult result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const oracle::ChiBounds& b);
oracle::ChiBounds bounds_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// Pretty-printed JSON with sorted keys.
std::string emit(const Report& r);
Report parse_report(const std::string& text);

// Short human-readable rendering.
std::string render_text(const Report& r);

}  // namespace cayley::cli
