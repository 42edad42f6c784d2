#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ramsey_lab/cycles.hpp"
#include "ramsey_lab/io.hpp"

namespace ramsey_lab {

/// One experiment run. JSON config keys and CLI flags share the same
/// kebab-case names (key "coloring-seed" <-> flag --coloring-seed).
struct ExperimentConfig {
  std::string mode;  // generate | enumerate | color | greedy | verify | concentration | oracle

  // Graph source: either parameters (k, m, p, seed, optionally via paper) or graph_file.
  int k = 3;
  int r = 2;
  std::uint64_t n = 0;
  std::optional<std::uint32_t> m;
  std::optional<double> p;
  std::optional<double> c;
  std::optional<std::array<std::uint64_t, 3>> paper;  // k r n
  std::uint64_t seed = 1;
  std::string graph_file;

  std::string coloring = "random";  // random | balanced-greedy | vertex-cut | round-robin
  std::uint64_t coloring_seed = 1;
  std::string coloring_file;
  std::optional<std::uint64_t> randomize_choices;

  std::string property = "all";  // i | ii | iii | all
  std::size_t trials = 100;
  bool adversarial_c = true;
  std::string statistic = "t_k";
  Vertex vertex = 0;
  bool emit_trials = false;

  std::uint64_t cycle_cap = kDefaultCycleCap;
  std::uint64_t state_cap = 1'000'000;
  std::uint64_t coloring_cap = 10'000'000;
  std::uint64_t brute_cap = 10'000'000;

  // Execution settings; they never change results and are not echoed in reports.
  unsigned threads = 1;
  std::string out;
  std::string report = "report.json";
  std::string csv;
  bool timestamp = false;
};

/// Throws ConfigError("config.<key>: ...") on unknown keys or bad types.
ExperimentConfig config_from_json(const Json& doc);
/// Overlays the keys present in `doc` onto `base`.
void apply_config_json(const Json& doc, ExperimentConfig& base);
/// Experiment-relevant keys only (no threads, output paths or timestamp flag).
Json config_to_json(const ExperimentConfig& config);

struct RunResult {
  /// 0 success, 2 property-violation findings.
  int exit_code = 0;
  Json report;
  /// Graph, hypergraph or coloring document, when the mode produces one.
  std::optional<Json> artifact;
  std::string csv;
};

/// Runs the pipeline for config.mode without writing any file.
RunResult execute(const ExperimentConfig& config);

/// execute() plus writing report, artifact (--out) and CSV (--csv).
int run(const ExperimentConfig& config);

/// Structured description of a failure for stderr.
Json error_to_json(const std::exception& error);

}  // namespace ramsey_lab
