#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_lab/cycles.hpp"
#include "ramsey_lab/layered_graph.hpp"

namespace ramsey_lab {

// --- Analytic tail bounds ---------------------------------------------------

/// Pr(X <= E - lambda) <= exp(-lambda^2 / (2E)) for binomial X.
double chernoff_lower(double expectation, double lambda);

/// Pr(X >= E + lambda) <= exp(-lambda^2 / (2(E + lambda/3))) for binomial X.
double chernoff_upper(double expectation, double lambda);

/// a_k = 8^k sqrt(k!).
double kim_vu_constant(int k);

struct KimVuBound {
  double a_k = 0.0;
  /// a_k (E E')^{1/2} lambda^k
  double threshold = 0.0;
  /// -lambda + (k-1) log n; the tail probability is O(exp(tail_exponent)).
  double tail_exponent = 0.0;
};

/// Deviation threshold and tail exponent of the Kim-Vu polynomial
/// concentration inequality. `e0` is the centre E_0 and is not used by the
/// threshold itself. Requires lambda > 1, k >= 1, emax, eprime >= 0, n > 0.
KimVuBound kim_vu_threshold(double e0, double emax, double eprime, int k, double lambda, double n);

// --- Expectations -----------------------------------------------------------

struct ExpectedStats {
  double t_b_per_path = 0.0;  // m p^2
  double t_b = 0.0;           // n m p^2 (family of n paths)
  double y = 0.0;             // 2 n^2 p^2 (the dominating binomial's mean)
  double x_v = 0.0;           // m^{k-1} p^k
  double x_v_prime = 0.0;     // m^{k-2} p^{k-1}
  double t_k = 0.0;           // m^k p^k
};

/// Closed forms for parts of size m, edge probability p, families of n paths.
ExpectedStats expected_stats(int k, double m, double p, double n);

/// Specialization to m = c n, p = sqrt(ln n / n).
ExpectedStats expected_stats(const PaperParams& params);

// --- Monte Carlo property checks ----------------------------------------------

/// Parameters echoed into reports. c is the effective c = m / n unless set.
struct VerifyParams {
  int r = 2;
  std::uint64_t n = 0;
  double c = 0.0;
  double p = 0.0;
};

enum class TrialOutcome { pass, violation, skipped };

std::string_view outcome_name(TrialOutcome outcome);

struct TrialRow {
  std::size_t trial = 0;
  std::string sampler;  // "random", "high_x_v"
  TrialOutcome outcome = TrialOutcome::skipped;
  std::string statistic;
  std::uint64_t lhs = 0;  // y_{A,B} or z_C
  std::uint64_t aux = 0;  // t_B or t_k
  double rhs = 0.0;       // t_B/(2kr) or t_k/(2r)
  std::string note;       // skip reason
};

struct PropertyReport {
  std::string property;  // "i", "ii"
  int k = 0;
  std::uint32_t m = 0;
  VerifyParams params;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t passes = 0;
  std::size_t skips = 0;
  double margin_min = 0.0;   // min over evaluated trials of rhs - lhs
  double margin_mean = 0.0;
  std::vector<TrialRow> rows;
};

/// Property (i): per trial, packs n disjoint proper (k-1)-paths by random
/// walks (retry budget 100 n; starvation skips the trial), samples A from the
/// remaining vertices with |A| = min(n, available), and flags y >= t_B/(2kr).
PropertyReport check_property_i(const LayeredGraph& g, const VerifyParams& params,
                                std::size_t trials, std::uint64_t seed, unsigned threads = 1);

/// Property (ii): per trial, samples C uniformly with |C| = (k-1) n and flags
/// z_C >= t_k/(2r). With `adversarial`, one extra trial uses the (k-1) n
/// vertices of largest X_v. Trials are skipped when t_k = 0.
/// Throws ConfigError when n = 0 or |V| < (k-1) n.
PropertyReport check_property_ii(const LayeredGraph& g, const VerifyParams& params,
                                 std::size_t trials, std::uint64_t seed, bool adversarial,
                                 unsigned threads = 1);

struct GrowthReport {
  std::uint64_t t_k = 0;
  double scale = 0.0;    // (n ln n)^{k/2}
  double ratio_c = 0.0;  // t_k / (c^k (n ln n)^{k/2})
  double ratio_r = 0.0;  // t_k / (r^k (n ln n)^{k/2})
  VerifyParams params;
};

/// Property (iii): growth of t_k against c^k (n ln n)^{k/2}.
GrowthReport check_property_iii(const LayeredGraph& g, const VerifyParams& params,
                                unsigned threads = 1);

// --- Concentration ------------------------------------------------------------

enum class Statistic { t_k, x_v, t_b_single };

Statistic parse_statistic(std::string_view name);
std::string_view statistic_name(Statistic statistic);

inline constexpr std::array<double, 3> kEpsilonGrid{0.1, 0.25, 0.5};

struct DeviationRow {
  double epsilon = 0.0;
  double fraction_below = 0.0;  // value < (1 - eps) E
  double fraction_above = 0.0;  // value > (1 + eps) E
  double fraction_outside = 0.0;
  double chernoff_lower = 1.0;  // bound at lambda = eps E
  double chernoff_upper = 1.0;
  /// Kim-Vu: the lambda whose threshold equals eps E, and the resulting tail
  /// exponent; only meaningful for x_v and when lambda > 1.
  double kim_vu_lambda = 0.0;
  double kim_vu_exponent = 0.0;
  bool kim_vu_applicable = false;
};

struct ConcentrationReport {
  Statistic statistic = Statistic::t_k;
  int k = 0;
  std::uint32_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  Vertex vertex = 0;
  std::size_t trials = 0;
  double expectation = 0.0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::array<DeviationRow, kEpsilonGrid.size()> deviations{};
  std::vector<std::uint64_t> values;
};

/// Regenerates G(k, m, p) per trial with seed derive_seed(seed, trial) and
/// measures the statistic: t_k; X_v of `vertex`; or, for t_b_single, the
/// number of vertices of part k-1 adjacent to both vertex 0 and vertex
/// (k-2) m -- the extension slots of the fixed tuple (0, m, ..., (k-2) m).
ConcentrationReport concentration_experiment(int k, std::uint32_t m, double p, Statistic statistic,
                                             std::size_t trials, std::uint64_t seed,
                                             Vertex vertex = 0, unsigned threads = 1);

}  // namespace ramsey_lab
