#include "ramsey_lab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ramsey_lab/error.hpp"
#include "ramsey_lab/parallel.hpp"
#include "ramsey_lab/rng.hpp"

namespace ramsey_lab {

double chernoff_lower(double expectation, double lambda) {
  if (!(expectation > 0.0)) throw DomainError("chernoff_lower needs E > 0");
  if (!(lambda >= 0.0)) throw DomainError("chernoff_lower needs lambda >= 0");
  return std::exp(-lambda * lambda / (2.0 * expectation));
}

double chernoff_upper(double expectation, double lambda) {
  if (!(expectation > 0.0)) throw DomainError("chernoff_upper needs E > 0");
  if (!(lambda >= 0.0)) throw DomainError("chernoff_upper needs lambda >= 0");
  return std::exp(-lambda * lambda / (2.0 * (expectation + lambda / 3.0)));
}

double kim_vu_constant(int k) {
  if (k < 1) throw DomainError("Kim-Vu constant needs k >= 1");
  return std::pow(8.0, k) * std::sqrt(std::tgamma(static_cast<double>(k) + 1.0));
}

KimVuBound kim_vu_threshold(double e0, double emax, double eprime, int k, double lambda, double n) {
  if (!(lambda > 1.0)) throw DomainError("Kim-Vu needs lambda > 1");
  if (!(emax >= 0.0) || !(eprime >= 0.0) || !(e0 >= 0.0))
    throw DomainError("Kim-Vu expectations must be non-negative");
  if (!(n > 0.0)) throw DomainError("Kim-Vu needs n > 0");
  KimVuBound out;
  out.a_k = kim_vu_constant(k);
  out.threshold = out.a_k * std::sqrt(emax * eprime) * std::pow(lambda, k);
  out.tail_exponent = -lambda + (k - 1) * std::log(n);
  return out;
}

ExpectedStats expected_stats(int k, double m, double p, double n) {
  if (k < 3) throw DomainError("k must be at least 3");
  if (!(m >= 0.0) || !(n >= 0.0)) throw DomainError("m and n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  ExpectedStats s;
  s.t_b_per_path = m * p * p;
  s.t_b = n * s.t_b_per_path;
  s.y = 2.0 * n * n * p * p;
  s.x_v = std::pow(m, k - 1) * std::pow(p, k);
  s.x_v_prime = std::pow(m, k - 2) * std::pow(p, k - 1);
  s.t_k = std::pow(m * p, k);
  return s;
}

ExpectedStats expected_stats(const PaperParams& params) {
  return expected_stats(params.k, static_cast<double>(params.part_size), params.p,
                        static_cast<double>(params.n));
}

std::string_view outcome_name(TrialOutcome outcome) {
  switch (outcome) {
    case TrialOutcome::pass: return "pass";
    case TrialOutcome::violation: return "violation";
    case TrialOutcome::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

VerifyParams resolve(const LayeredGraph& g, VerifyParams params) {
  if (params.r < 2) throw ConfigError("r must be at least 2");
  if (params.c == 0.0 && params.n > 0)
    params.c = static_cast<double>(g.part_size()) / static_cast<double>(params.n);
  return params;
}

void summarize(PropertyReport& report) {
  report.trials = report.rows.size();
  double sum = 0.0;
  double low = std::numeric_limits<double>::infinity();
  std::size_t evaluated = 0;
  for (const auto& row : report.rows) {
    switch (row.outcome) {
      case TrialOutcome::pass: ++report.passes; break;
      case TrialOutcome::violation: ++report.violations; break;
      case TrialOutcome::skipped: ++report.skips; continue;
    }
    const double margin = row.rhs - static_cast<double>(row.lhs);
    sum += margin;
    low = std::min(low, margin);
    ++evaluated;
  }
  report.margin_min = evaluated ? low : 0.0;
  report.margin_mean = evaluated ? sum / static_cast<double>(evaluated) : 0.0;
}

// Random packing of disjoint proper (k-1)-paths: random start vertex, then a
// random forward walk through unused vertices.
bool sample_family(const LayeredGraph& g, std::size_t count, Rng& rng, TrashFamily& family,
                   std::vector<bool>& used) {
  const auto steps = static_cast<std::size_t>(g.k() - 2);
  const std::uint64_t budget = 100 * static_cast<std::uint64_t>(count);
  std::vector<Vertex> walk;
  std::vector<Vertex> options;
  for (std::uint64_t attempt = 0; family.size() < count && attempt < budget; ++attempt) {
    const auto v = static_cast<Vertex>(rng.below(g.vertex_count()));
    if (used[v]) continue;
    walk.assign(1, v);
    bool ok = true;
    for (std::size_t s = 0; s < steps; ++s) {
      options.clear();
      for (Vertex w : g.neighbors(walk.back(), Direction::forward))
        if (!used[w]) options.push_back(w);
      if (options.empty()) {
        ok = false;
        break;
      }
      walk.push_back(options[rng.below(options.size())]);
    }
    if (!ok) continue;
    for (Vertex w : walk) used[w] = true;
    family.paths.push_back(make_proper_path(g, walk));
  }
  return family.size() == count;
}

}  // namespace

PropertyReport check_property_i(const LayeredGraph& g, const VerifyParams& in, std::size_t trials,
                                std::uint64_t seed, unsigned threads) {
  PropertyReport report;
  report.property = "i";
  report.k = g.k();
  report.m = g.part_size();
  report.params = resolve(g, in);
  const std::size_t n = report.params.n;
  const auto kr2 = static_cast<std::uint64_t>(2 * g.k() * report.params.r);
  report.rows.resize(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    TrialRow& row = report.rows[t];
    row.trial = t;
    row.sampler = "random";
    row.statistic = "y_AB";
    Rng rng(derive_seed(seed, t));
    TrashFamily family;
    std::vector<bool> used(g.vertex_count(), false);
    if (n == 0 || !sample_family(g, n, rng, family, used)) {
      row.outcome = TrialOutcome::skipped;
      row.note = "trash sampler starvation";
      return;
    }
    std::vector<Vertex> available;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!used[v]) available.push_back(v);
    const std::size_t a_size = std::min(n, available.size());
    rng.partial_shuffle(std::span<Vertex>(available), a_size);
    available.resize(a_size);
    row.lhs = count_restricted_extensions(g, available, family);
    row.aux = count_family_extensions(g, family);
    row.rhs = static_cast<double>(row.aux) / static_cast<double>(kr2);
    row.outcome = kr2 * row.lhs < row.aux ? TrialOutcome::pass : TrialOutcome::violation;
  });
  summarize(report);
  return report;
}

PropertyReport check_property_ii(const LayeredGraph& g, const VerifyParams& in, std::size_t trials,
                                 std::uint64_t seed, bool adversarial, unsigned threads) {
  PropertyReport report;
  report.property = "ii";
  report.k = g.k();
  report.m = g.part_size();
  report.params = resolve(g, in);
  const std::size_t n = report.params.n;
  if (n == 0) throw ConfigError("property (ii) needs n >= 1");
  const std::size_t c_size = static_cast<std::size_t>(g.k() - 1) * n;
  if (g.vertex_count() < c_size)
    throw ConfigError("property (ii) needs at least (k-1) n = " + std::to_string(c_size) + " vertices");
  const auto r2 = static_cast<std::uint64_t>(2 * report.params.r);
  const std::uint64_t t_k = count_proper_cycles(g, threads);

  auto evaluate = [&](TrialRow& row, std::span<const Vertex> c) {
    row.statistic = "z_C";
    row.aux = t_k;
    row.rhs = static_cast<double>(t_k) / static_cast<double>(r2);
    if (t_k == 0) {
      row.outcome = TrialOutcome::skipped;
      row.note = "t_k = 0";
      return;
    }
    row.lhs = count_intersecting(g, c);
    row.outcome = r2 * row.lhs < t_k ? TrialOutcome::pass : TrialOutcome::violation;
  };

  report.rows.resize(trials + (adversarial ? 1 : 0));
  parallel_for(trials, threads, [&](std::size_t t) {
    TrialRow& row = report.rows[t];
    row.trial = t;
    row.sampler = "random";
    Rng rng(derive_seed(seed, t));
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    rng.partial_shuffle(std::span<Vertex>(all), c_size);
    all.resize(c_size);
    evaluate(row, all);
  });
  if (adversarial) {
    std::vector<std::uint64_t> x(g.vertex_count());
    parallel_for(x.size(), threads, [&](std::size_t v) { x[v] = cycles_through_vertex(g, static_cast<Vertex>(v)); });
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] > x[b]; });
    order.resize(c_size);
    TrialRow& row = report.rows.back();
    row.trial = trials;
    row.sampler = "high_x_v";
    evaluate(row, order);
  }
  summarize(report);
  return report;
}

GrowthReport check_property_iii(const LayeredGraph& g, const VerifyParams& in, unsigned threads) {
  GrowthReport out;
  out.params = resolve(g, in);
  if (out.params.n < 2) throw ConfigError("property (iii) needs n >= 2");
  const double n = static_cast<double>(out.params.n);
  const int k = g.k();
  out.t_k = count_proper_cycles(g, threads);
  out.scale = std::pow(n * std::log(n), k / 2.0);
  out.ratio_c = static_cast<double>(out.t_k) / (std::pow(out.params.c, k) * out.scale);
  out.ratio_r = static_cast<double>(out.t_k) / (std::pow(out.params.r, k) * out.scale);
  return out;
}

Statistic parse_statistic(std::string_view name) {
  if (name == "t_k") return Statistic::t_k;
  if (name == "X_v" || name == "x_v") return Statistic::x_v;
  if (name == "t_B_single" || name == "t_b_single") return Statistic::t_b_single;
  throw DomainError("unknown statistic '" + std::string(name) + "'");
}

std::string_view statistic_name(Statistic statistic) {
  switch (statistic) {
    case Statistic::t_k: return "t_k";
    case Statistic::x_v: return "X_v";
    case Statistic::t_b_single: return "t_B_single";
  }
  return "unknown";
}

ConcentrationReport concentration_experiment(int k, std::uint32_t m, double p, Statistic statistic,
                                             std::size_t trials, std::uint64_t seed, Vertex vertex,
                                             unsigned threads) {
  GraphParams base{k, m, p, seed};
  base.validate();
  if (vertex >= static_cast<std::size_t>(k) * m) throw DomainError("unknown vertex " + std::to_string(vertex));
  ConcentrationReport rep;
  rep.statistic = statistic;
  rep.k = k;
  rep.m = m;
  rep.p = p;
  rep.seed = seed;
  rep.vertex = vertex;
  rep.trials = trials;
  const auto ex = expected_stats(k, m, p, 1.0);
  switch (statistic) {
    case Statistic::t_k: rep.expectation = ex.t_k; break;
    case Statistic::x_v: rep.expectation = ex.x_v; break;
    case Statistic::t_b_single: rep.expectation = ex.t_b_per_path; break;
  }

  rep.values.resize(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    GraphParams params = base;
    params.seed = derive_seed(seed, t);
    const auto g = generate_random(params);
    switch (statistic) {
      case Statistic::t_k: rep.values[t] = count_proper_cycles(g); break;
      case Statistic::x_v: rep.values[t] = cycles_through_vertex(g, vertex); break;
      case Statistic::t_b_single: {
        const auto a = g.neighbors(g.part_begin(k - 2), Direction::forward);
        const auto b = g.neighbors(g.part_begin(0), Direction::backward);
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        rep.values[t] = common.size();
        break;
      }
    }
  });

  if (trials > 0) {
    double sum = 0.0;
    for (auto v : rep.values) sum += static_cast<double>(v);
    rep.mean = sum / static_cast<double>(trials);
    double sq = 0.0;
    for (auto v : rep.values) sq += (static_cast<double>(v) - rep.mean) * (static_cast<double>(v) - rep.mean);
    rep.variance = trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;
    rep.min = *std::min_element(rep.values.begin(), rep.values.end());
    rep.max = *std::max_element(rep.values.begin(), rep.values.end());
  }

  for (std::size_t i = 0; i < kEpsilonGrid.size(); ++i) {
    DeviationRow& row = rep.deviations[i];
    row.epsilon = kEpsilonGrid[i];
    const double delta = row.epsilon * rep.expectation;
    std::size_t below = 0, above = 0;
    for (auto v : rep.values) {
      const double x = static_cast<double>(v);
      below += x < rep.expectation - delta;
      above += x > rep.expectation + delta;
    }
    if (trials > 0) {
      row.fraction_below = static_cast<double>(below) / static_cast<double>(trials);
      row.fraction_above = static_cast<double>(above) / static_cast<double>(trials);
      row.fraction_outside = static_cast<double>(below + above) / static_cast<double>(trials);
    }
    if (rep.expectation > 0.0) {
      row.chernoff_lower = chernoff_lower(rep.expectation, delta);
      row.chernoff_upper = chernoff_upper(rep.expectation, delta);
    }
    if (statistic == Statistic::x_v && ex.x_v > 0.0 && ex.x_v_prime > 0.0) {
      // Invert a_k (E E')^{1/2} lambda^k = eps E for lambda.
      const double base_threshold = kim_vu_constant(k) * std::sqrt(ex.x_v * ex.x_v_prime);
      row.kim_vu_lambda = std::pow(delta / base_threshold, 1.0 / k);
      const double variables = static_cast<double>(k) * m * m;
      row.kim_vu_exponent = -row.kim_vu_lambda + (k - 1) * std::log(variables);
      row.kim_vu_applicable = row.kim_vu_lambda > 1.0;
    }
  }
  return rep;
}

}  // namespace ramsey_lab
