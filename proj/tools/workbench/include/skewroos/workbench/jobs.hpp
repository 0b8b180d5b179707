#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewroos/workbench/serialize.hpp"

namespace skewroos::workbench {

enum class Format { Json, Csv, Human };
Format parse_format(const std::string& name);

/// Command-line settings that override the spec file.
struct Overrides {
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> budget_subsets;
  std::optional<std::uint64_t> budget_subspaces;
  std::optional<unsigned> max_n;
};

/// One code job. Exactly one input mode: "T" (explicit defining set),
/// "roos" (certificate parameters expanded to their positions) or
/// "repeated_gabidulin" (b, s, delta').
struct JobSpec {
  TowerPtr tower;
  Elem alpha{};
  std::string input_mode;
  DefiningSet t;  // as given, before closure
  std::optional<RoosCertificate> roos;
  bool auto_close = true;
  DistanceOptions distance;
  SearchOptions search;
};

JobSpec load_job(const Json& spec, const Overrides& overrides = {});

Json cmd_construct(const JobSpec& job);
Json cmd_bounds(const JobSpec& job);
Json cmd_distance(const JobSpec& job);
/// Bounds first; exact search only for the metrics the sandwich leaves open.
Json cmd_classify(const JobSpec& job);

struct TablesOutcome {
  Json report;                          // {"table1": [...], "table2": [...], "checks": [...]}
  std::vector<std::string> mismatches;  // empty when every cell matches the golden file
};
/// Runs the bundled row specs in `data_dir` and compares against golden.json there.
TablesOutcome cmd_tables(const std::string& data_dir, const Overrides& overrides = {});

/// Renders a command result; CSV is only defined for tables.
std::string render(const std::string& command, const Json& result, Format format);

}  // namespace skewroos::workbench
