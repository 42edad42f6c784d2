#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ramsey_lab/coloring.hpp"
#include "ramsey_lab/cycles.hpp"
#include "ramsey_lab/layered_graph.hpp"

namespace ramsey_lab {

enum class ChoicePolicy {
  /// Least eligible starting edge (canonical order) and least extension vertex.
  lexicographic,
  /// Seeded uniform choice among the eligible options.
  randomized,
};

struct GreedyOptions {
  ChoicePolicy policy = ChoicePolicy::lexicographic;
  std::uint64_t seed = 0;
  /// Re-check the window and partition invariants after every transition.
  bool check_invariants = false;
};

/// Deleted-edge flags, indexed by edge id.
using EdgeFlags = std::vector<bool>;

struct RoundResult {
  enum class Kind { path_found, trash_full, no_edge_in_unused };
  Kind kind = Kind::no_edge_in_unused;
  /// The tight path for path_found; the path A at termination otherwise.
  std::vector<Vertex> path;
  TrashFamily trash;
};

std::string_view round_kind_name(RoundResult::Kind kind);

/// One run of the greedy procedure for `color` on h minus `deleted`.
///
/// Step 2 lays a fresh edge out from its part-0 vertex in increasing part
/// order. Step 3 extends the tail (last k-1 vertices) by an unused vertex of
/// the missing part closing a working-color, non-deleted edge; otherwise the
/// tail moves to the trash and, if fewer than k vertices remain, the path is
/// released. Terminates with path_found at n vertices, trash_full at n trash
/// paths, or no_edge_in_unused when step 2 fails.
RoundResult greedy_round(const TightHypergraph& h, const LayeredGraph& g, const Coloring& coloring,
                         int color, std::size_t n, const EdgeFlags& deleted,
                         const GreedyOptions& options = {});

struct CertificateRound {
  /// A at the moment the trash reached n paths.
  std::vector<Vertex> path_snapshot;
  TrashFamily trash;
  /// Working-color edges removed after the round.
  std::uint64_t deleted_edges = 0;
};

struct RoundAudit {
  std::uint64_t y = 0;        // y_{A_i, B_i}
  std::uint64_t t_b = 0;      // t_{B_i}
  std::uint64_t deleted = 0;  // working-color edges removed after the round
  bool property_i = false;    // y < t_B / (2kr)
  double margin_i = 0.0;      // t_B / (2kr) - y
};

struct CertificateAudit {
  int k = 0;
  int r = 0;
  int color = 0;
  std::vector<RoundAudit> rounds;
  std::uint64_t z_c = 0;
  std::uint64_t t_k = 0;
  std::uint64_t edges = 0;  // |E(H)|
  std::uint64_t e_b = 0;    // working-color edges of the original H
  std::uint64_t sum_y = 0;
  std::uint64_t sum_t_b = 0;

  bool accounting = false;        // (a) e_b <= sum y + z_C
  bool all_property_i = false;    // (b) every round
  bool property_ii = false;       // (c) z_C < t_k / (2r)
  bool extension_budget = false;  // (d) sum t_B <= k t_k
  bool minority = false;          // (e) e_b < |E| / r
  double margin_ii = 0.0;         // t_k / (2r) - z_C
  double margin_minority = 0.0;   // |E| / r - e_b
  bool families_disjoint = false; // no trash path appears in two rounds

  /// (b) and (c) imply (e): the proof's accounting chain on this data.
  bool implication_holds() const { return !(all_property_i && property_ii) || minority; }
  bool all_checks_pass() const {
    return accounting && all_property_i && property_ii && extension_budget && minority;
  }
};

struct PathOutcome {
  int color = 0;
  std::vector<Vertex> vertices;
  std::size_t round = 0;  // 0-based round in which the path was found
};

struct Certificate {
  int color = 0;
  std::size_t n = 0;
  std::vector<CertificateRound> rounds;
  TrashFamily final_trash;
  /// C: vertices of the final trash family, sorted.
  std::vector<Vertex> intersecting_set;
  CertificateAudit audit;
};

using GreedyOutcome = std::variant<PathOutcome, Certificate>;

/// Runs greedy rounds on the majority color, deleting after each trash_full
/// round every working-color edge that extends one of its trash paths.
GreedyOutcome run_outer(const TightHypergraph& h, const LayeredGraph& g, const Coloring& coloring,
                        std::size_t n, const GreedyOptions& options = {});

/// Recomputes every count of the certificate from the graph.
CertificateAudit audit_certificate(const Certificate& certificate, const TightHypergraph& h,
                                   const LayeredGraph& g, const Coloring& coloring);

}  // namespace ramsey_lab
