#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ramsey_lab {

class TightHypergraph;

/// An r-coloring of the hyperedges of a TightHypergraph, indexed by edge id
/// (canonical order).
struct Coloring {
  int r = 2;
  std::vector<std::uint8_t> colors;

  std::size_t size() const { return colors.size(); }
  int operator[](std::size_t edge) const { return colors[edge]; }

  /// Edge counts per color.
  std::vector<std::uint64_t> counts() const;

  /// Throws InvariantError unless the coloring is total over h with values in [0, r).
  void validate_for(const TightHypergraph& h) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Color with the most edges; ties go to the smallest color index.
/// Throws DomainError on an empty coloring.
int pick_majority_color(const Coloring& coloring);

/// i.i.d. uniform colors: edge e gets scale_below(stream_at(seed, e), r).
Coloring random_coloring(const TightHypergraph& h, int r, std::uint64_t seed,
                         unsigned threads = 1);

enum class AdversarialStrategy {
  /// Edges in canonical order; each takes, among the colors minimizing its
  /// one-step tight-path score, the least used so far (then the smallest).
  balanced_greedy,
  /// Random vertex set S; edges meeting S get color 0, the rest color 1.
  vertex_cut,
  /// Edge e gets color e mod r.
  round_robin,
};

AdversarialStrategy parse_strategy(std::string_view name);
std::string_view strategy_name(AdversarialStrategy strategy);

/// `seed` is only consulted by vertex_cut. vertex_cut puts each vertex in S
/// with probability 1 - 2^{-1/k}, so an edge meets S with probability 1/2.
Coloring adversarial_coloring(const TightHypergraph& h, int r, AdversarialStrategy strategy,
                              std::uint64_t seed = 0);

}  // namespace ramsey_lab
