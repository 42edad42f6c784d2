// ramsey-lab: experiment runner for layered-graph tight-path constructions.
//
//   ramsey-lab <mode> [flags]        mode: generate enumerate color greedy
//                                          verify concentration oracle
//   ramsey-lab --config run.json     mode taken from the config file
//
// Flags override keys of --config. Exit status: 0 success, 2 property
// violations found, 1 errors (structured JSON on stderr).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsey_lab/error.hpp"
#include "ramsey_lab/experiment.hpp"

using namespace ramsey_lab;

namespace {

template <class T, class Setter>
void flag(CLI::App& app, const std::string& name, const std::string& help, Setter set) {
  app.add_option_function<T>("--" + name, set, help);
}

void add_flags(CLI::App& app, ExperimentConfig& c, std::string& config_path) {
  app.add_option("--config", config_path, "JSON config file; flags override its keys");
  flag<int>(app, "k", "uniformity / number of parts", [&](int v) { c.k = v; });
  flag<int>(app, "r", "number of colors", [&](int v) { c.r = v; });
  flag<std::uint64_t>(app, "n", "target tight-path length", [&](std::uint64_t v) { c.n = v; });
  flag<std::uint32_t>(app, "m", "part size override", [&](std::uint32_t v) { c.m = v; });
  flag<double>(app, "p", "edge probability override", [&](double v) { c.p = v; });
  flag<double>(app, "c", "c override (part size = c n) with --paper", [&](double v) { c.c = v; });
  app.add_option_function<std::vector<std::uint64_t>>(
         "--paper",
         [&](const std::vector<std::uint64_t>& v) { c.paper = std::array<std::uint64_t, 3>{v[0], v[1], v[2]}; },
         "K R N: c = 16 K^2 R, m = c N, p = sqrt(ln N / N)")
      ->expected(3);
  flag<std::uint64_t>(app, "seed", "graph seed (and trial master seed)", [&](std::uint64_t v) { c.seed = v; });
  flag<std::string>(app, "graph-file", "read the graph from a JSON file", [&](const std::string& v) { c.graph_file = v; });
  flag<std::string>(app, "coloring", "random | balanced-greedy | vertex-cut | round-robin",
                    [&](const std::string& v) { c.coloring = v; });
  flag<std::uint64_t>(app, "coloring-seed", "coloring seed", [&](std::uint64_t v) { c.coloring_seed = v; });
  flag<std::string>(app, "coloring-file", "read the coloring from a JSON file",
                    [&](const std::string& v) { c.coloring_file = v; });
  flag<std::uint64_t>(app, "randomize-choices", "seeded random greedy choices",
                      [&](std::uint64_t v) { c.randomize_choices = v; });
  flag<std::string>(app, "property", "i | ii | iii | all", [&](const std::string& v) { c.property = v; });
  flag<std::size_t>(app, "trials", "Monte Carlo trials", [&](std::size_t v) { c.trials = v; });
  flag<bool>(app, "adversarial-c", "add the high-X_v set to property (ii)", [&](bool v) { c.adversarial_c = v; });
  flag<std::string>(app, "statistic", "t_k | X_v | t_B_single", [&](const std::string& v) { c.statistic = v; });
  flag<Vertex>(app, "vertex", "fixed vertex for X_v", [&](Vertex v) { c.vertex = v; });
  app.add_flag_function("--emit-trials", [&](std::int64_t) { c.emit_trials = true; }, "per-trial rows in the report");
  flag<std::uint64_t>(app, "cycle-cap", "maximum number of hyperedges", [&](std::uint64_t v) { c.cycle_cap = v; });
  flag<std::uint64_t>(app, "state-cap", "path-search state cap", [&](std::uint64_t v) { c.state_cap = v; });
  flag<std::uint64_t>(app, "coloring-cap", "arrow-check coloring cap", [&](std::uint64_t v) { c.coloring_cap = v; });
  flag<std::uint64_t>(app, "brute-cap", "brute-force tuple cap", [&](std::uint64_t v) { c.brute_cap = v; });
  flag<unsigned>(app, "threads", "worker threads (env RAMSEY_LAB_THREADS)", [&](unsigned v) { c.threads = v; });
  flag<std::string>(app, "out", "artifact path (graph / hypergraph / coloring)", [&](const std::string& v) { c.out = v; });
  flag<std::string>(app, "report", "report path, '-' for stdout", [&](const std::string& v) { c.report = v; });
  flag<std::string>(app, "csv", "per-trial CSV path", [&](const std::string& v) { c.csv = v; });
  app.add_flag_function("--timestamp", [&](std::int64_t) { c.timestamp = true; }, "add metadata.timestamp");
}

}  // namespace

// --config must be applied before any flag, so it is located ahead of parsing.
std::string find_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

int main(int argc, char** argv) {
  ExperimentConfig config;
  try {
    if (const char* env = std::getenv("RAMSEY_LAB_THREADS")) config.threads = static_cast<unsigned>(std::stoul(env));
    const std::string path = find_config(argc, argv);
    if (!path.empty()) apply_config_json(read_json_file(path), config);
  } catch (const std::exception& e) {
    std::cerr << error_to_json(e).dump() << "\n";
    return 1;
  }

  CLI::App app{"ramsey-lab: random layered graphs, proper-cycle hypergraphs and greedy tight paths"};
  app.require_subcommand(0, 1);
  std::string config_path;
  add_flags(app, config, config_path);
  std::vector<CLI::App*> modes;
  for (const char* mode : {"generate", "enumerate", "color", "greedy", "verify", "concentration", "oracle"}) {
    auto* sub = app.add_subcommand(mode, std::string("run the ") + mode + " pipeline");
    add_flags(*sub, config, config_path);
    modes.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    for (auto* sub : modes)
      if (sub->parsed()) config.mode = sub->get_name();
    if (config.mode.empty()) throw ConfigError("config.mode: no mode given (subcommand or config key)");
    return run(config);
  } catch (const std::exception& e) {
    std::cerr << error_to_json(e).dump() << "\n";
    return 1;
  }
}
