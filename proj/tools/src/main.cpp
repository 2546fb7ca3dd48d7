#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cayley/error.hpp"
#include "cayley_cli/commands.hpp"
#include "cayley_cli/io.hpp"

namespace {

using cayley::cli::Report;

int finish(const Report& r, bool json) {
  std::cout << (json ? cayley::cli::emit(r) : cayley::cli::render_text(r));
  if (!json && r.error) std::cerr << r.error->kind << ": " << r.error->message << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic numbers of abelian Cayley graphs given by Heuberger matrices"};
  app.require_subcommand(1);

  bool json = false;
  bool no_timings = false;
  cayley::cli::CommandOptions options;
  std::string matrix, matrix_file, vector_file = "-";

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Emit a JSON report");
    sub->add_flag("--no-timings", no_timings, "Omit timings (byte-identical output)");
  };
  auto add_matrix = [&](CLI::App* sub) {
    auto* m = sub->add_option("-m,--matrix", matrix, "Matrix, e.g. \"9 21; 1 4\" or JSON");
    auto* f = sub->add_option("-f,--file", matrix_file, "Read the matrix from a file ('-' = stdin)");
    m->excludes(f);
    f->excludes(m);
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--r-max", options.oracle.r_max, "Largest ball radius")
        ->check(CLI::Range(0, 12));
    sub->add_option("--n-max", options.oracle.n_max, "Largest quotient modulus")
        ->check(CLI::Range(2, 64));
  };

  auto* classify = app.add_subcommand("classify", "Chromatic number with certificate");
  add_matrix(classify);
  add_common(classify);

  auto* verify = app.add_subcommand("verify", "Classifier cross-checked by the oracle");
  add_matrix(verify);
  add_oracle(verify);
  add_common(verify);

  auto* planar = app.add_subcommand("planar", "Cayley graph of plane unit vectors");
  planar->add_option("file", vector_file, "Vector file ('-' = stdin)");
  add_common(planar);

  std::string shape = "4x2";
  cayley::intlat::Int bound = 1;
  bool with_oracle = false, dedupe = false;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string reports_path;
  auto* sweep = app.add_subcommand("sweep", "Classify every matrix of a shape");
  sweep->add_option("--shape", shape, "Nx1 (N <= 5), 3x2, 4x2 or tri")->capture_default_str();
  sweep->add_option("--bound", bound, "Entries in [-bound, bound]")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  sweep->add_flag("--oracle", with_oracle, "Cross-check with the oracle");
  sweep->add_option("--sample", sample, "Oracle on this many random instances (0 = all)");
  sweep->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  sweep->add_flag("--dedupe", dedupe, "Classify one matrix per equivalence class");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("--reports", reports_path, "Write per-instance JSON reports (one per line)");
  add_oracle(sweep);
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cayley::cli::kExitParse;
  }
  options.timings = !no_timings;

  auto matrix_text = [&]() -> std::string {
    if (!matrix_file.empty()) return cayley::cli::read_input(matrix_file);
    if (matrix.empty()) throw cayley::ParseError("give a matrix with -m or -f");
    return matrix;
  };

  try {
    if (*classify) return finish(cayley::cli::cmd_classify(matrix_text(), options), json);
    if (*verify) return finish(cayley::cli::cmd_verify(matrix_text(), options), json);
    if (*planar) {
      return finish(cayley::cli::cmd_planar(cayley::cli::read_input(vector_file), options),
                    json);
    }
    cayley::cli::SweepOptions so = cayley::cli::parse_shape(shape);
    so.bound = bound;
    so.oracle = with_oracle;
    so.sample = sample;
    so.seed = seed;
    so.dedupe = dedupe;
    so.threads = threads;
    so.keep_reports = !reports_path.empty();
    so.command = options;
    const cayley::cli::SweepSummary summary = cayley::cli::cmd_sweep(so);
    if (!reports_path.empty()) {
      std::ofstream out(reports_path);
      for (const Report& r : summary.reports) out << cayley::cli::to_json(r).dump() << "\n";
    }
    const nlohmann::json js = cayley::cli::to_json(summary, so);
    if (json) {
      std::cout << js.dump(2) << "\n";
    } else {
      std::cout << "enumerated " << summary.enumerated << ", filtered " << summary.filtered
                << ", duplicates " << summary.duplicates << ", classified "
                << summary.classified << "\n";
      for (const auto& [k, v] : summary.outcomes) std::cout << "  " << k << ": " << v << "\n";
      if (summary.oracle_runs) {
        std::cout << "oracle runs " << summary.oracle_runs << " (budget hit "
                  << summary.budget_exceeded << ")\n";
        for (const auto& [k, v] : summary.statuses) std::cout << "  " << k << ": " << v << "\n";
      }
      for (const Report& r : summary.violations) std::cout << cayley::cli::emit(r);
    }
    return summary.exit_code;
  } catch (const std::exception& e) {
    std::cerr << cayley::cli::error_kind(e) << ": " << e.what() << "\n";
    return cayley::cli::exit_code_for(e);
  }
}
