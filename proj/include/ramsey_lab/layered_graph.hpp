#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ramsey_lab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Parameters of a random C_k-colorable layered graph.
struct GraphParams {
  int k = 3;
  std::uint32_t part_size = 1;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;

  /// Throws DomainError unless k >= 3, part_size >= 1 and 0 <= edge_prob <= 1.
  void validate() const;
};

/// The construction's parameterization: c = 16 k^2 r, p = sqrt(ln n / n),
/// parts of size c n.
struct PaperParams {
  int k = 3;
  int r = 2;
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  double p = 0.0;
  std::uint64_t part_size = 0;
};

PaperParams paper_params(int k, int r, std::uint64_t n);

enum class Direction { forward, backward };

struct GraphOptions {
  /// Per-vertex adjacency bitsets are kept when part_size <= this value.
  std::uint32_t bitset_threshold = 4096;
};

/// A k-partite graph whose edges only join cyclically consecutive parts.
///
/// Vertex ids are 0-based; part i (0-based) occupies [i*m, (i+1)*m). For each
/// vertex the forward neighbors (part i+1 mod k) and backward neighbors
/// (part i-1 mod k) are kept as sorted lists, and, for small parts, as
/// bitsets indexed by the neighbor's position inside its part. Immutable.
class LayeredGraph {
 public:
  /// Throws DomainError on edges between non-consecutive parts, inside a
  /// part, out of range, or duplicated.
  LayeredGraph(int k, std::uint32_t part_size, std::span<const Edge> edges,
               GraphOptions options = {});

  int k() const { return k_; }
  std::uint32_t part_size() const { return m_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(k_) * m_; }
  std::uint64_t edge_count() const { return edge_count_; }

  bool contains(Vertex v) const { return v < vertex_count(); }
  int part_of(Vertex v) const { return static_cast<int>(v / m_); }
  Vertex part_begin(int part) const { return static_cast<Vertex>(part) * m_; }
  std::uint32_t local_index(Vertex v) const { return v % m_; }
  int next_part(int part) const { return part + 1 == k_ ? 0 : part + 1; }
  int prev_part(int part) const { return part == 0 ? k_ - 1 : part - 1; }

  /// Sorted neighbors of v in part_of(v)+1 (forward) or part_of(v)-1 (backward).
  /// Throws DomainError for an unknown vertex.
  std::span<const Vertex> neighbors(Vertex v, Direction direction) const;

  bool adjacent(Vertex u, Vertex v) const;

  bool has_bitsets() const { return has_bits_; }
  std::size_t words_per_part() const { return words_; }
  /// Adjacency bitset of v over the target part (bit i = local vertex i).
  /// Only valid when has_bitsets().
  std::span<const std::uint64_t> neighbor_bits(Vertex v, Direction direction) const {
    const auto& bits = direction == Direction::forward ? fwd_bits_ : bwd_bits_;
    return {bits.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const LayeredGraph& a, const LayeredGraph& b) {
    return a.k_ == b.k_ && a.m_ == b.m_ && a.fwd_offsets_ == b.fwd_offsets_ &&
           a.fwd_targets_ == b.fwd_targets_;
  }

 private:
  int k_;
  std::uint32_t m_;
  std::uint64_t edge_count_ = 0;
  std::size_t words_ = 0;
  bool has_bits_ = false;
  std::vector<std::uint64_t> fwd_offsets_, bwd_offsets_;
  std::vector<Vertex> fwd_targets_, bwd_targets_;
  std::vector<std::uint64_t> fwd_bits_, bwd_bits_;
};

/// Draws each of the k*m^2 consecutive-part pairs independently with
/// probability p. Pair (i, a, b) -- part i, local a in part i, local b in
/// part i+1 -- uses SplitMix64 draw number (i*m + a)*m + b of params.seed.
LayeredGraph generate_random(const GraphParams& params, GraphOptions options = {});

/// Every consecutive-part pair is an edge.
LayeredGraph complete_layered(int k, std::uint32_t part_size, GraphOptions options = {});

/// Same graph plus one more edge (which must be absent and admissible).
LayeredGraph with_edge(const LayeredGraph& g, Edge extra);

}  // namespace ramsey_lab
