#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "skewroos/error.hpp"
#include "skewroos/workbench/jobs.hpp"

#ifndef SKEWROOS_DATA_DIR
#define SKEWROOS_DATA_DIR "data"
#endif

namespace wb = skewroos::workbench;

namespace {

constexpr int kInputError = 1;
constexpr int kInvariantViolation = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error [cli-workbench/invalid_input]: cannot write '" << out_path << "'\n";
    return kInputError;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew cyclic codes: construction, distance bounds, exact distances"};
  std::string command;
  std::string spec_path;
  std::string out_path;
  std::string format = "json";
  std::string data_dir = SKEWROOS_DATA_DIR;
  wb::Overrides ov;

  app.add_option("command", command, "construct | bounds | distance | classify | tables")
      ->required()
      ->check(CLI::IsMember({"construct", "bounds", "distance", "classify", "tables"}));
  app.add_option("--spec", spec_path, "job spec (JSON)");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--threads", ov.threads, "worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--budget-subsets", ov.budget_subsets, "cap on column subsets tested (0 = none)");
  app.add_option("--budget-subspaces", ov.budget_subspaces, "cap on support subspaces tested (0 = none)");
  app.add_option("--max-n", ov.max_n, "refuse certificate searches above this length");
  app.add_option("--data-dir", data_dir, "directory with the bundled table specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    const wb::Format fmt = wb::parse_format(format);
    if (command == "tables") {
      const wb::TablesOutcome t = wb::cmd_tables(data_dir, ov);
      const int rc = emit(wb::render(command, t.report, fmt), out_path);
      for (const auto& m : t.mismatches) std::cerr << "mismatch: " << m << "\n";
      if (!t.mismatches.empty()) return kInvariantViolation;
      return rc;
    }
    if (spec_path.empty()) {
      std::cerr << "error [cli-workbench/invalid_input]: " << command << " needs --spec FILE\n";
      return kInputError;
    }
    const wb::JobSpec job = wb::load_job(wb::read_json_file(spec_path), ov);
    wb::Json result;
    if (command == "construct") result = wb::cmd_construct(job);
    if (command == "bounds") result = wb::cmd_bounds(job);
    if (command == "distance") result = wb::cmd_distance(job);
    if (command == "classify") result = wb::cmd_classify(job);
    return emit(wb::render(command, result, fmt), out_path);
  } catch (const skewroos::Error& e) {
    std::cerr << "error [" << e.module() << "/" << skewroos::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.is_invariant_violation() ? kInvariantViolation : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error [cli-workbench/invalid_input]: " << e.what() << "\n";
    return kInputError;
  }
}
