#include "cayley_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <thread>

#include "cayley/error.hpp"
#include "cayley_cli/io.hpp"

namespace cayley::cli {

namespace {

using nlohmann::json;
using intlat::IntMatrix;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

json matrix_input(const IntMatrix& m) {
  return {{"matrix", intlat::to_text(m)}, {"rows", matrix_to_json(m)["rows"]}};
}

void record_error(Report& r, const std::exception& e) {
  r.error = ErrorInfo{error_kind(e), e.what()};
  r.exit_code = exit_code_for(e);
  if (dynamic_cast<const UnsupportedShape*>(&e)) {
    r.status = "UNSUPPORTED";
    r.detail = e.what();
  }
}

// Runs the classifier and re-checks its certificate. False when it threw.
bool run_classifier(Report& r, const sacg::HeubergerMatrix& m, const CommandOptions& options) {
  const auto t0 = Clock::now();
  try {
    r.result = classify::chromatic_number(m, options.classify);
  } catch (const std::exception& e) {
    record_error(r, e);
    return false;
  }
  if (options.timings) r.timings["classify"] = seconds_since(t0);
  if (const std::string bad = classify::check_certificate(*r.result); !bad.empty()) {
    r.status = "VIOLATION";
    r.detail = "certificate rejected: " + bad;
    r.exit_code = kExitViolation;
    return true;
  }
  r.status = "CONSISTENT";
  r.detail = "certificate verified";
  return true;
}

}  // namespace

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const UnsupportedShape*>(&e)) return "UnsupportedShape";
  if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "BudgetExceeded";
  if (dynamic_cast<const InternalViolation*>(&e)) return "InternalViolation";
  if (dynamic_cast<const NotCanonicalizable*>(&e)) return "NotCanonicalizable";
  if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  if (dynamic_cast<const NoProperColoring*>(&e)) return "NoProperColoring";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e)) {
    return kExitParse;
  }
  if (dynamic_cast<const UnsupportedShape*>(&e) || dynamic_cast<const OverflowError*>(&e)) {
    return kExitUnsupported;
  }
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kExitBudget;
  return kExitViolation;
}

Report classify_matrix(const IntMatrix& m, const CommandOptions& options) {
  Report r;
  r.command = "classify";
  r.input = matrix_input(m);
  try {
    run_classifier(r, sacg::HeubergerMatrix(m), options);
  } catch (const std::exception& e) {
    record_error(r, e);
  }
  return r;
}

Report verify_matrix(const IntMatrix& m, const CommandOptions& options) {
  Report r;
  r.command = "verify";
  r.input = matrix_input(m);
  r.input["r_max"] = options.oracle.r_max;
  r.input["n_max"] = options.oracle.n_max;
  try {
    const sacg::HeubergerMatrix h(m);
    const bool classified = run_classifier(r, h, options);
    if (!classified && r.exit_code != kExitUnsupported) return r;
    const auto t0 = Clock::now();
    r.bounds = oracle::chi_bounds(h, options.oracle);
    if (options.timings) r.timings["oracle"] = seconds_since(t0);
    if (!classified || r.exit_code != kExitOk) return r;

    std::string detail;
    const oracle::CheckStatus status = oracle::judge(*r.result, *r.bounds, &detail);
    r.status = oracle::to_string(status);
    r.detail = detail;
    if (status == oracle::CheckStatus::kViolation) {
      r.exit_code = kExitViolation;
    } else if (r.bounds->partial && !r.bounds->pinned()) {
      r.exit_code = kExitBudget;
    }
  } catch (const std::exception& e) {
    record_error(r, e);
  }
  return r;
}

Report cmd_classify(const std::string& matrix_text, const CommandOptions& options) {
  try {
    return classify_matrix(parse_matrix(matrix_text), options);
  } catch (const std::exception& e) {
    Report r;
    r.command = "classify";
    r.input = {{"text", matrix_text}};
    record_error(r, e);
    return r;
  }
}

Report cmd_verify(const std::string& matrix_text, const CommandOptions& options) {
  try {
    return verify_matrix(parse_matrix(matrix_text), options);
  } catch (const std::exception& e) {
    Report r;
    r.command = "verify";
    r.input = {{"text", matrix_text}};
    record_error(r, e);
    return r;
  }
}

Report cmd_planar(const std::string& vector_text, const CommandOptions& options) {
  Report r;
  r.command = "planar";
  r.input = {{"text", vector_text}};
  try {
    const std::vector<planar::QuadVec> vs = parse_vectors(vector_text);
    json echo = json::array();
    for (const auto& v : vs) echo.push_back(planar::to_string(v));
    r.input = {{"d", vs.front().d}, {"vectors", echo}};

    const auto t0 = Clock::now();
    planar::PlanarResult pr = planar::classify_unit_vectors(vs, options.classify);
    if (options.timings) r.timings["classify"] = seconds_since(t0);
    r.relations = pr.relations.matrix();
    r.result = std::move(pr.result);
    if (const std::string bad = classify::check_certificate(*r.result); !bad.empty()) {
      r.status = "VIOLATION";
      r.detail = "certificate rejected: " + bad;
      r.exit_code = kExitViolation;
    } else if (r.result->has_loops() || r.result->chi > 3) {
      r.status = "VIOLATION";
      r.detail = "unit vectors in the plane give at most 3 colors, got " +
                 r.result->describe();
      r.exit_code = kExitViolation;
    } else {
      r.status = "CONSISTENT";
      r.detail = "certificate verified";
    }
  } catch (const std::exception& e) {
    record_error(r, e);
  }
  return r;
}

// --- sweep ------------------------------------------------------------------

SweepOptions parse_shape(const std::string& shape) {
  SweepOptions o;
  if (shape == "3x2") {
    o.shape = SweepShape::k3x2;
  } else if (shape == "4x2") {
    o.shape = SweepShape::k4x2;
  } else if (shape == "tri") {
    o.shape = SweepShape::kTriTriangle;
  } else if (shape.size() == 3 && shape[1] == 'x' && shape[2] == '1' && shape[0] >= '1' &&
             shape[0] <= '5') {
    o.shape = SweepShape::kColumn;
    o.column_rows = static_cast<std::size_t>(shape[0] - '0');
  } else {
    throw ParseError("unknown sweep shape '" + shape + "'; expected Nx1 (N <= 5), 3x2, 4x2 or tri");
  }
  return o;
}

namespace {

struct Layout {
  std::size_t rows = 0, cols = 0, free_entries = 0;
};

Layout layout_of(const SweepOptions& o) {
  switch (o.shape) {
    case SweepShape::kColumn: return {o.column_rows, 1, o.column_rows};
    case SweepShape::k3x2: return {3, 2, 6};
    case SweepShape::k4x2: return {4, 2, 8};
    case SweepShape::kTriTriangle: return {4, 2, 3};
  }
  return {};
}

IntMatrix instance(const SweepOptions& o, const Layout& l, std::uint64_t index) {
  const std::uint64_t base = static_cast<std::uint64_t>(2 * o.bound + 1);
  std::vector<Int> free(l.free_entries);
  // Last entry varies fastest.
  for (std::size_t k = l.free_entries; k-- > 0;) {
    free[k] = static_cast<Int>(index % base) - o.bound;
    index /= base;
  }
  if (o.shape == SweepShape::kTriTriangle) {
    return IntMatrix{{1, free[0]}, {1, free[1]}, {1, free[2]}, {0, 1}};
  }
  IntMatrix m(l.rows, l.cols);
  for (std::size_t k = 0; k < free.size(); ++k) m(k / l.cols, k % l.cols) = free[k];
  return m;
}

bool passes_filter(const SweepOptions& o, const IntMatrix& m) {
  switch (o.shape) {
    case SweepShape::kColumn: return !m.is_zero_column(0);
    case SweepShape::kTriTriangle: return true;
    case SweepShape::k3x2:
    case SweepShape::k4x2:
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.is_zero_row(i)) return false;
      }
      return intlat::rank(m) == 2;
  }
  return false;
}

// Canonical representative of the orbit under signed row permutations and
// unimodular column operations.
IntMatrix orbit_key(const IntMatrix& m) {
  if (m.cols() == 1) {
    intlat::IntVector v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, 0) < 0 ? -m(i, 0) : m(i, 0));
    std::sort(v.begin(), v.end());
    return IntMatrix::from_columns(m.rows(), {v});
  }
  std::optional<IntMatrix> best;
  for (const IntMatrix& p : intlat::signed_permutations(m.rows())) {
    IntMatrix h = intlat::column_hnf(p * m).h;
    if (!best || std::lexicographical_compare(h.data().begin(), h.data().end(),
                                              best->data().begin(), best->data().end())) {
      best = std::move(h);
    }
  }
  return *best;
}

std::string outcome_key(const Report& r) {
  if (r.result) return r.result->has_loops() ? "loops" : "chi" + std::to_string(r.result->chi);
  if (r.status && *r.status == "UNSUPPORTED") return "unsupported";
  return "error";
}

// The tri-triangle dichotomy, checked on every loop-free instance.
void check_tri_dichotomy(Report& r, const IntMatrix& m) {
  if (!r.result || r.result->has_loops()) return;
  const Int sum = m(0, 1) + m(1, 1) + m(2, 1);
  const bool expect_four = sum % 3 == 0;
  if ((r.result->chi == 4) != expect_four) {
    r.status = "VIOLATION";
    r.detail = "tri-triangle: a+b+c = " + std::to_string(sum) + " but chi = " +
               std::to_string(r.result->chi);
    r.exit_code = kExitViolation;
  }
}

struct Slot {
  bool oracle = false;
  bool partial = false;
  std::string outcome;
  std::optional<std::string> status;
  std::optional<Report> report;  // kept for violations or on request
};

}  // namespace

SweepSummary cmd_sweep(const SweepOptions& o) {
  if (o.bound < 0 || o.bound > 4) throw ValidationError("sweep bound must be in [0, 4]");
  const Layout layout = layout_of(o);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < layout.free_entries; ++k) {
    total *= static_cast<std::uint64_t>(2 * o.bound + 1);
  }

  SweepSummary s;
  s.enumerated = total;
  std::vector<std::uint64_t> live;
  {
    std::set<std::vector<Int>> seen;
    for (std::uint64_t i = 0; i < total; ++i) {
      const IntMatrix m = instance(o, layout, i);
      if (!passes_filter(o, m)) {
        ++s.filtered;
        continue;
      }
      if (o.dedupe) {
        const IntMatrix key = orbit_key(m);
        std::vector<Int> flat(key.data().begin(), key.data().end());
        flat.push_back(static_cast<Int>(key.cols()));
        if (!seen.insert(std::move(flat)).second) {
          ++s.duplicates;
          continue;
        }
      }
      live.push_back(i);
    }
  }
  std::vector<Slot> slots(live.size());
  if (o.oracle) {
    if (o.sample > 0 && o.sample < live.size()) {
      std::vector<std::size_t> positions(live.size());
      for (std::size_t k = 0; k < positions.size(); ++k) positions[k] = k;
      std::vector<std::size_t> chosen;
      std::mt19937_64 rng(o.seed);
      std::sample(positions.begin(), positions.end(), std::back_inserter(chosen), o.sample,
                  rng);
      for (std::size_t k : chosen) slots[k].oracle = true;
    } else {
      for (Slot& slot : slots) slot.oracle = true;
    }
  }

  const unsigned threads =
      std::max(1u, o.threads ? o.threads : std::thread::hardware_concurrency());
  auto work = [&](unsigned t) {
    for (std::size_t k = t; k < live.size(); k += threads) {
      const IntMatrix m = instance(o, layout, live[k]);
      Slot& slot = slots[k];
      Report r = slot.oracle ? verify_matrix(m, o.command) : classify_matrix(m, o.command);
      if (o.shape == SweepShape::kTriTriangle) check_tri_dichotomy(r, m);
      slot.outcome = outcome_key(r);
      slot.status = r.status;
      slot.partial = r.bounds && r.bounds->partial;
      if (o.keep_reports || r.exit_code == kExitViolation) slot.report = std::move(r);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  for (Slot& slot : slots) {
    ++s.classified;
    ++s.outcomes[slot.outcome];
    if (slot.oracle) {
      ++s.oracle_runs;
      if (slot.status) ++s.statuses[*slot.status];
      if (slot.partial) ++s.budget_exceeded;
    }
    if (!slot.report) continue;
    if (slot.report->exit_code == kExitViolation) {
      s.violations.push_back(*slot.report);
      s.exit_code = kExitViolation;
    }
    if (o.keep_reports) s.reports.push_back(std::move(*slot.report));
  }
  return s;
}

json to_json(const SweepSummary& s, const SweepOptions& o) {
  static const char* kShapes[] = {"column", "3x2", "4x2", "tri"};
  json shape = kShapes[static_cast<int>(o.shape)];
  if (o.shape == SweepShape::kColumn) shape = std::to_string(o.column_rows) + "x1";
  json violations = json::array();
  for (const Report& r : s.violations) violations.push_back(to_json(r));
  return {{"shape", shape},
          {"bound", o.bound},
          {"oracle", o.oracle},
          {"sample", o.sample},
          {"seed", o.seed},
          {"dedupe", o.dedupe},
          {"enumerated", s.enumerated},
          {"filtered", s.filtered},
          {"duplicates", s.duplicates},
          {"classified", s.classified},
          {"outcomes", s.outcomes},
          {"oracle_runs", s.oracle_runs},
          {"statuses", s.statuses},
          {"budget_exceeded", s.budget_exceeded},
          {"violations", violations},
          {"exit_code", s.exit_code}};
}

}  // namespace cayley::cli
