#include "ramsey_lab/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <set>

#include "ramsey_lab/coloring.hpp"
#include "ramsey_lab/error.hpp"
#include "ramsey_lab/greedy.hpp"
#include "ramsey_lab/oracle.hpp"
#include "ramsey_lab/properties.hpp"
#include "ramsey_lab/reports.hpp"
#include "ramsey_lab/rng.hpp"

namespace ramsey_lab {

namespace {

const std::set<std::string> kModes{"generate", "enumerate", "color", "greedy",
                                   "verify", "concentration", "oracle"};

template <class T>
void read_key(const Json& doc, const char* key, T& target) {
  if (!doc.contains(key)) return;
  try {
    target = doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config.") + key + ": " + e.what());
  }
}

template <class T>
void read_optional(const Json& doc, const char* key, std::optional<T>& target) {
  if (!doc.contains(key)) return;
  if (doc.at(key).is_null()) {
    target.reset();
    return;
  }
  T value{};
  read_key(doc, key, value);
  target = value;
}

}  // namespace

void apply_config_json(const Json& doc, ExperimentConfig& c) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::set<std::string> known{
      "mode", "k", "r", "n", "m", "p", "c", "paper", "seed", "graph-file", "coloring",
      "coloring-seed", "coloring-file", "randomize-choices", "property", "trials",
      "adversarial-c", "statistic", "vertex", "emit-trials", "cycle-cap", "state-cap",
      "coloring-cap", "brute-cap", "threads", "out", "report", "csv", "timestamp"};
  for (const auto& item : doc.items())
    if (!known.count(item.key())) throw ConfigError("config." + item.key() + ": unknown key");
  read_key(doc, "mode", c.mode);
  read_key(doc, "k", c.k);
  read_key(doc, "r", c.r);
  read_key(doc, "n", c.n);
  read_optional(doc, "m", c.m);
  read_optional(doc, "p", c.p);
  read_optional(doc, "c", c.c);
  read_optional(doc, "paper", c.paper);
  read_key(doc, "seed", c.seed);
  read_key(doc, "graph-file", c.graph_file);
  read_key(doc, "coloring", c.coloring);
  read_key(doc, "coloring-seed", c.coloring_seed);
  read_key(doc, "coloring-file", c.coloring_file);
  read_optional(doc, "randomize-choices", c.randomize_choices);
  read_key(doc, "property", c.property);
  read_key(doc, "trials", c.trials);
  read_key(doc, "adversarial-c", c.adversarial_c);
  read_key(doc, "statistic", c.statistic);
  read_key(doc, "vertex", c.vertex);
  read_key(doc, "emit-trials", c.emit_trials);
  read_key(doc, "cycle-cap", c.cycle_cap);
  read_key(doc, "state-cap", c.state_cap);
  read_key(doc, "coloring-cap", c.coloring_cap);
  read_key(doc, "brute-cap", c.brute_cap);
  read_key(doc, "threads", c.threads);
  read_key(doc, "out", c.out);
  read_key(doc, "report", c.report);
  read_key(doc, "csv", c.csv);
  read_key(doc, "timestamp", c.timestamp);
}

ExperimentConfig config_from_json(const Json& doc) {
  ExperimentConfig c;
  apply_config_json(doc, c);
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  auto opt = [](const auto& o) { return o ? Json(*o) : Json(nullptr); };
  return Json{{"mode", c.mode},
              {"k", c.k},
              {"r", c.r},
              {"n", c.n},
              {"m", opt(c.m)},
              {"p", opt(c.p)},
              {"c", opt(c.c)},
              {"paper", opt(c.paper)},
              {"seed", c.seed},
              {"graph-file", c.graph_file},
              {"coloring", c.coloring},
              {"coloring-seed", c.coloring_seed},
              {"coloring-file", c.coloring_file},
              {"randomize-choices", opt(c.randomize_choices)},
              {"property", c.property},
              {"trials", c.trials},
              {"adversarial-c", c.adversarial_c},
              {"statistic", c.statistic},
              {"vertex", c.vertex},
              {"emit-trials", c.emit_trials},
              {"cycle-cap", c.cycle_cap},
              {"state-cap", c.state_cap},
              {"coloring-cap", c.coloring_cap},
              {"brute-cap", c.brute_cap}};
}

namespace {

struct ResolvedSource {
  bool from_file = false;
  int k = 3;
  std::uint32_t m = 0;
  double p = 0.0;
  std::optional<PaperParams> paper;
  double c_eff = 0.0;
};

ResolvedSource resolve_source(ExperimentConfig& c) {
  ResolvedSource s;
  if (!c.graph_file.empty()) {
    if (c.m || c.p || c.paper)
      throw ConfigError("config: exactly one graph source allowed (graph-file or k/m/p/paper)");
    s.from_file = true;
    return s;
  }
  if (c.paper) {
    const auto& [pk, pr, pn] = *c.paper;
    s.paper = paper_params(static_cast<int>(pk), static_cast<int>(pr), pn);
    c.k = s.paper->k;
    c.r = s.paper->r;
    c.n = s.paper->n;
    std::uint64_t m = s.paper->part_size;
    if (c.c) m = static_cast<std::uint64_t>(std::llround(*c.c * static_cast<double>(pn)));
    if (c.m) m = *c.m;
    if (m == 0 || m > 0xffffffffULL) throw ConfigError("config.m: part size out of range");
    s.m = static_cast<std::uint32_t>(m);
    s.p = c.p ? *c.p : s.paper->p;
  } else {
    if (!c.m) throw ConfigError("config.m: required when generating a graph (or use paper)");
    if (!c.p) throw ConfigError("config.p: required when generating a graph (or use paper)");
    s.m = *c.m;
    s.p = *c.p;
  }
  s.k = c.k;
  GraphParams{s.k, s.m, s.p, c.seed}.validate();
  if (c.n > 0) s.c_eff = c.c ? *c.c : static_cast<double>(s.m) / static_cast<double>(c.n);
  return s;
}

void validate_caps(const ExperimentConfig& c) {
  if (c.cycle_cap == 0) throw ConfigError("config.cycle-cap: must be positive");
  if (c.state_cap == 0) throw ConfigError("config.state-cap: must be positive");
  if (c.coloring_cap == 0) throw ConfigError("config.coloring-cap: must be positive");
  if (c.brute_cap == 0) throw ConfigError("config.brute-cap: must be positive");
  if (c.threads == 0) throw ConfigError("config.threads: must be positive");
  if (!kModes.count(c.mode)) throw ConfigError("config.mode: unknown mode '" + c.mode + "'");
}

LayeredGraph load_graph(const ExperimentConfig& c, const ResolvedSource& s) {
  if (s.from_file) return graph_from_json(read_json_file(c.graph_file));
  return generate_random(GraphParams{s.k, s.m, s.p, c.seed});
}

Json graph_summary(const LayeredGraph& g, const ResolvedSource& s, const ExperimentConfig& c) {
  return Json{{"source", s.from_file ? "file" : "params"},
              {"k", g.k()},
              {"m", g.part_size()},
              {"p", s.from_file ? Json(nullptr) : Json(s.p)},
              {"seed", s.from_file ? Json(nullptr) : Json(c.seed)},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()}};
}

Coloring make_coloring(const ExperimentConfig& c, const TightHypergraph& h) {
  if (!c.coloring_file.empty()) {
    auto col = coloring_from_json(read_json_file(c.coloring_file));
    col.validate_for(h);
    return col;
  }
  if (c.coloring == "random") return random_coloring(h, c.r, c.coloring_seed, c.threads);
  return adversarial_coloring(h, c.r, parse_strategy(c.coloring), c.coloring_seed);
}

Json coloring_summary(const Coloring& col, const ExperimentConfig& c) {
  return Json{{"source", c.coloring_file.empty() ? c.coloring : std::string("file")},
              {"r", col.r},
              {"counts", col.counts()}};
}

std::uint64_t required_n(const ExperimentConfig& c) {
  if (c.n == 0) throw ConfigError("config.n: required for mode " + c.mode);
  return c.n;
}

}  // namespace

RunResult execute(const ExperimentConfig& input) {
  ExperimentConfig c = input;
  validate_caps(c);
  const auto source = resolve_source(c);
  RunResult result;
  Json& rep = result.report;
  rep["schema"] = "ramsey-lab/report";
  rep["schema_version"] = 1;
  rep["mode"] = c.mode;
  rep["library_version"] = RAMSEY_LAB_VERSION;
  rep["config"] = config_to_json(c);
  if (source.paper) {
    Json expansion = paper_params_to_json(*source.paper);
    expansion["m_effective"] = source.m;
    expansion["p_effective"] = source.p;
    expansion["c_effective"] = source.c_eff;
    rep["paper_expansion"] = std::move(expansion);
  }

  if (c.mode == "concentration") {
    if (source.from_file) throw ConfigError("config.graph-file: concentration regenerates graphs from k/m/p");
    const auto report = concentration_experiment(source.k, source.m, source.p, parse_statistic(c.statistic),
                                                 c.trials, c.seed, c.vertex, c.threads);
    rep["concentration"] = concentration_report_to_json(report, c.emit_trials);
    result.csv = concentration_rows_csv(report);
  } else {
    const auto g = load_graph(c, source);
    rep["graph"] = graph_summary(g, source, c);

    if (c.mode == "generate") {
      result.artifact = graph_to_json(g);
    } else if (c.mode == "enumerate") {
      const auto h = TightHypergraph::build(g, c.cycle_cap, c.threads);
      std::uint64_t sum = 0, lo = ~std::uint64_t{0}, hi = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto x = cycles_through_vertex(g, v);
        sum += x;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
      const bool handshake = sum == static_cast<std::uint64_t>(g.k()) * h.edge_count();
      rep["counts"] = {{"t_k", h.edge_count()},
                       {"x_v_min", lo},
                       {"x_v_max", hi},
                       {"x_v_mean", static_cast<double>(sum) / static_cast<double>(g.vertex_count())},
                       {"x_v_sum", sum},
                       {"handshake", handshake}};
      result.artifact = hypergraph_to_json(h);
      if (!handshake) result.exit_code = 2;
    } else if (c.mode == "color") {
      const auto h = TightHypergraph::build(g, c.cycle_cap, c.threads);
      const auto col = make_coloring(c, h);
      rep["hypergraph"] = {{"vertices", h.vertex_count()}, {"edges", h.edge_count()}};
      rep["coloring"] = coloring_summary(col, c);
      result.artifact = coloring_to_json(col);
    } else if (c.mode == "greedy") {
      const auto n = required_n(c);
      const auto h = TightHypergraph::build(g, c.cycle_cap, c.threads);
      const auto col = make_coloring(c, h);
      GreedyOptions options;
      if (c.randomize_choices) {
        options.policy = ChoicePolicy::randomized;
        options.seed = *c.randomize_choices;
      }
      const auto outcome = run_outer(h, g, col, n, options);
      rep["hypergraph"] = {{"vertices", h.vertex_count()}, {"edges", h.edge_count()}};
      rep["coloring"] = coloring_summary(col, c);
      rep["outcome"] = outcome_to_json(outcome);
      if (const auto* path = std::get_if<PathOutcome>(&outcome)) {
        const auto check = validate_tight_path(h, path->vertices, ColorFilter{&col, path->color});
        rep["outcome"]["validated"] = static_cast<bool>(check);
        if (!check) throw InvariantError("greedy returned an invalid path");
      } else if (!std::get<Certificate>(outcome).audit.all_checks_pass()) {
        result.exit_code = 2;
      }
    } else if (c.mode == "verify") {
      const auto n = required_n(c);
      const VerifyParams params{c.r, n, source.c_eff, source.from_file ? 0.0 : source.p};
      Json props = Json::object();
      std::string csv;
      bool violated = false;
      if (c.property == "i" || c.property == "all") {
        const auto report = check_property_i(g, params, c.trials, derive_seed(c.seed, 101), c.threads);
        props["i"] = property_report_to_json(report, c.emit_trials);
        csv += property_rows_csv(report);
        violated = violated || report.violations > 0;
      }
      if (c.property == "ii" || c.property == "all") {
        const auto report =
            check_property_ii(g, params, c.trials, derive_seed(c.seed, 102), c.adversarial_c, c.threads);
        props["ii"] = property_report_to_json(report, c.emit_trials);
        auto rows = property_rows_csv(report);
        csv += csv.empty() ? rows : rows.substr(std::string(kCsvHeader).size());
        violated = violated || report.violations > 0;
      }
      if (c.property == "iii" || c.property == "all") {
        props["iii"] = growth_report_to_json(check_property_iii(g, params, c.threads));
      }
      if (props.empty()) throw ConfigError("config.property: expected i, ii, iii or all");
      rep["properties"] = std::move(props);
      result.csv = std::move(csv);
      if (violated) result.exit_code = 2;
    } else if (c.mode == "oracle") {
      const auto brute = brute_force_cycles(g, c.brute_cap);
      const auto fast = enumerate_proper_cycles(g, c.cycle_cap, c.threads);
      const auto h = TightHypergraph::build(g, c.cycle_cap, c.threads);
      Json oracle{{"brute_force_count", brute.size()},
                  {"enumerated_count", fast.size()},
                  {"agree", brute == fast}};
      if (c.n > 0) {
        const auto arrow = arrow_check(h, c.n, c.r, c.coloring_cap, c.state_cap, c.threads);
        oracle["arrow"] = {{"n", c.n},
                           {"r", c.r},
                           {"verdict", std::string(verdict_name(arrow.verdict))},
                           {"colorings_checked", arrow.colorings_checked},
                           {"counterexample", arrow.counterexample ? coloring_to_json(*arrow.counterexample)
                                                                   : Json(nullptr)}};
      }
      rep["oracle"] = std::move(oracle);
      if (brute != fast) result.exit_code = 2;
    }
  }

  if (c.timestamp) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    rep["metadata"] = {{"timestamp", buf}};
  }
  return result;
}

int run(const ExperimentConfig& config) {
  auto result = execute(config);
  if (!config.report.empty()) write_text_file(config.report, dump(result.report));
  if (!config.out.empty() && result.artifact) write_text_file(config.out, dump(*result.artifact));
  if (!config.csv.empty() && !result.csv.empty()) write_text_file(config.csv, result.csv);
  return result.exit_code;
}

Json error_to_json(const std::exception& error) {
  std::string type = "error";
  Json extra = Json::object();
  if (const auto* e = dynamic_cast<const ResourceLimitError*>(&error)) {
    type = "resource_limit";
    extra["limit"] = e->limit();
  } else if (dynamic_cast<const ConfigError*>(&error)) {
    type = "config";
  } else if (dynamic_cast<const DomainError*>(&error)) {
    type = "domain";
  } else if (dynamic_cast<const InvariantError*>(&error)) {
    type = "invariant";
  }
  Json out{{"type", type}, {"message", error.what()}};
  out.update(extra);
  return Json{{"error", std::move(out)}};
}

}  // namespace ramsey_lab
