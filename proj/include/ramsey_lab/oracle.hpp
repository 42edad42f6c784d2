#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ramsey_lab/coloring.hpp"
#include "ramsey_lab/cycles.hpp"
#include "ramsey_lab/layered_graph.hpp"

namespace ramsey_lab {

/// Reference enumeration: every one-per-part tuple in lexicographic order,
/// kept when all k cyclic adjacencies hold (checked by list lookup, without
/// the bitsets). Throws ResourceLimitError when m^k > cap.
std::vector<ProperCycle> brute_force_cycles(const LayeredGraph& g, std::uint64_t cap = 10'000'000);

enum class Verdict { yes, no, unknown };

std::string_view verdict_name(Verdict verdict);

struct PathSearch {
  Verdict verdict = Verdict::unknown;
  std::vector<Vertex> witness;
  std::uint64_t states = 0;
};

/// Exhaustive DFS for a tight path on n vertices all of whose k-windows are
/// hyperedges of `color`. Windows are treated as vertex sets; no ordering of
/// a hyperedge is assumed. Returns unknown once `state_cap` nodes were expanded.
PathSearch tight_path_exists(const TightHypergraph& h, const Coloring& coloring, int color,
                             std::size_t n, std::uint64_t state_cap = 1'000'000);

struct ArrowResult {
  Verdict verdict = Verdict::unknown;
  std::optional<Coloring> counterexample;
  std::uint64_t colorings_checked = 0;
};

/// Does h arrow the tight path on n vertices for r colors? Enumerates all
/// colorings with edge 0 fixed to color 0 (color symmetry), ascending
/// lexicographically; the counterexample is the least one found. Any capped
/// path search without a counterexample makes the verdict unknown. Throws
/// ResourceLimitError when r^|E| > coloring_cap.
ArrowResult arrow_check(const TightHypergraph& h, std::size_t n, int r,
                        std::uint64_t coloring_cap = 10'000'000,
                        std::uint64_t state_cap = 1'000'000, unsigned threads = 1);

}  // namespace ramsey_lab
