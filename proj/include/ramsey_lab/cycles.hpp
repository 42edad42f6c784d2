#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ramsey_lab/coloring.hpp"
#include "ramsey_lab/layered_graph.hpp"

namespace ramsey_lab {

using EdgeId = std::uint32_t;

inline constexpr std::uint64_t kDefaultCycleCap = 100'000'000;

/// A cycle meeting each part exactly once, stored indexed by part.
struct ProperCycle {
  std::vector<Vertex> by_part;

  friend auto operator<=>(const ProperCycle&, const ProperCycle&) = default;
};

/// A path meeting each part at most once whose parts form a cyclic arc.
/// Normalized so the first vertex lies in the lower-numbered boundary part.
struct ProperPath {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend auto operator<=>(const ProperPath&, const ProperPath&) = default;
};

/// Validates `vertices` as a proper path of g (distinct consecutive parts,
/// consecutive vertices adjacent, 1 <= length <= k-1) and normalizes its
/// orientation. Throws DomainError on a malformed path.
ProperPath make_proper_path(const LayeredGraph& g, std::vector<Vertex> vertices);

/// Pairwise vertex-disjoint proper (k-1)-paths.
struct TrashFamily {
  std::vector<ProperPath> paths;

  std::size_t size() const { return paths.size(); }
  bool empty() const { return paths.empty(); }
  /// Sorted union of the member vertex sets.
  std::vector<Vertex> vertices() const;
};

/// Throws InvariantError if a member is not a proper (k-1)-path of g or two
/// members share a vertex.
void validate_family(const LayeredGraph& g, const TrashFamily& family);

/// Membership bitset over all vertices, laid out part by part with the same
/// word stride as the graph's adjacency bitsets.
class VertexMask {
 public:
  explicit VertexMask(const LayeredGraph& g);
  VertexMask(const LayeredGraph& g, std::span<const Vertex> members);

  void insert(Vertex v) { bits_[word_of(v)] |= bit_of(v); }
  void erase(Vertex v) { bits_[word_of(v)] &= ~bit_of(v); }
  bool contains(Vertex v) const { return (bits_[word_of(v)] & bit_of(v)) != 0; }
  std::span<const std::uint64_t> part_words(int part) const {
    return {bits_.data() + static_cast<std::size_t>(part) * words_, words_};
  }

 private:
  std::size_t word_of(Vertex v) const { return (v / m_) * words_ + (v % m_) / 64; }
  static std::uint64_t bit_of_local(std::uint32_t local) { return 1ULL << (local % 64); }
  std::uint64_t bit_of(Vertex v) const { return bit_of_local(v % m_); }

  std::uint32_t m_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Calls visit(cycle) for every proper cycle through `start`; `cycle` lists
/// the vertices in walk order start, part+1, part+2, ... Vertices in
/// `excluded` (if given) are never used. Enumeration order is lexicographic
/// in walk order.
template <class Visit>
void for_each_cycle_through(const LayeredGraph& g, Vertex start, const VertexMask* excluded,
                            Visit&& visit);

/// Number of proper cycles through `start` avoiding `excluded`.
std::uint64_t count_cycles_through(const LayeredGraph& g, Vertex start,
                                   const VertexMask* excluded = nullptr);

/// Every proper k-cycle exactly once, in canonical (lexicographic by part) order.
/// Throws ResourceLimitError when the count exceeds `cap`.
std::vector<ProperCycle> enumerate_proper_cycles(const LayeredGraph& g,
                                                 std::uint64_t cap = kDefaultCycleCap,
                                                 unsigned threads = 1);

/// t_k: number of proper k-cycles.
std::uint64_t count_proper_cycles(const LayeredGraph& g, unsigned threads = 1);

/// X_v: number of proper cycles containing v. Throws DomainError for unknown v.
std::uint64_t cycles_through_vertex(const LayeredGraph& g, Vertex v);

/// Vertices u of the part missed by b that are adjacent to both endpoints of
/// b (each closes b into a distinct proper cycle), sorted. b must be a proper
/// (k-1)-path; throws DomainError otherwise.
std::vector<Vertex> extend_path(const LayeredGraph& g, const ProperPath& b);

/// t_B: distinct proper cycles having some member of the family as a subpath.
std::uint64_t count_family_extensions(const LayeredGraph& g, const TrashFamily& family);

/// y_{A,B}: distinct proper cycles formed by some B in the family plus an
/// extension vertex lying in A or in the vertex set of the family.
std::uint64_t count_restricted_extensions(const LayeredGraph& g, std::span<const Vertex> a,
                                          const TrashFamily& family);

/// z_C: proper cycles with at least one vertex in `c`.
std::uint64_t count_intersecting(const LayeredGraph& g, std::span<const Vertex> c);

/// The k-uniform hypergraph on V(G) whose edges are the proper k-cycles of G.
///
/// Hyperedges are stored flattened and part-indexed in canonical order, so
/// an id is the rank of its tuple; lookups by tuple binary-search inside the
/// block of the tuple's part-0 vertex. The vertex -> edge incidence index is
/// built on first use (thread-safe).
class TightHypergraph {
 public:
  static TightHypergraph build(const LayeredGraph& g, std::uint64_t cap = kDefaultCycleCap,
                               unsigned threads = 1);

  TightHypergraph(TightHypergraph&&) noexcept;
  TightHypergraph& operator=(TightHypergraph&&) noexcept;
  ~TightHypergraph();

  int k() const { return k_; }
  std::uint32_t part_size() const { return m_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(k_) * m_; }
  std::size_t edge_count() const { return k_ == 0 ? 0 : flat_.size() / k_; }

  /// Part-indexed vertices of edge e.
  std::span<const Vertex> edge(EdgeId e) const {
    return {flat_.data() + static_cast<std::size_t>(e) * k_, static_cast<std::size_t>(k_)};
  }

  /// Id of the hyperedge with this part-indexed tuple, if any.
  std::optional<EdgeId> find(std::span<const Vertex> by_part) const;
  /// Id of the hyperedge with this vertex set (any order), if any.
  std::optional<EdgeId> find_set(std::span<const Vertex> vertices) const;

  /// Ids of edges in canonical order whose part-0 vertex is `v0`: [first, last).
  std::pair<EdgeId, EdgeId> block_of(Vertex v0) const {
    return {static_cast<EdgeId>(block_[v0]), static_cast<EdgeId>(block_[v0 + 1])};
  }

  /// Ids of edges containing v, ascending.
  std::span<const EdgeId> incident(Vertex v) const;

  /// Throws InvariantError if g is not the graph this hypergraph was built from
  /// (compared by shape and cycle count).
  void check_source(const LayeredGraph& g) const;

 private:
  struct Incidence;
  TightHypergraph() = default;
  const Incidence& incidence() const;

  int k_ = 0;
  std::uint32_t m_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::uint64_t> block_;
  std::unique_ptr<Incidence> incidence_;
};

inline TightHypergraph build_hypergraph(const LayeredGraph& g,
                                        std::uint64_t cap = kDefaultCycleCap,
                                        unsigned threads = 1) {
  return TightHypergraph::build(g, cap, threads);
}

enum class PathDefect {
  none,
  too_short,
  unknown_vertex,
  repeated_vertex,
  not_a_hyperedge,
  wrong_color,
  deleted_edge,
};

std::string_view defect_name(PathDefect defect);

struct PathCheck {
  bool ok = false;
  PathDefect defect = PathDefect::none;
  /// Offending index: the vertex for repeats/unknowns, the window start otherwise.
  std::size_t position = 0;

  explicit operator bool() const { return ok; }
};

struct ColorFilter {
  const Coloring* coloring = nullptr;
  int color = 0;
};

/// True iff seq has distinct vertices, length >= k, and every window of k
/// consecutive vertices is a hyperedge of h (of the filter color, and not in
/// `deleted`, when those are given).
PathCheck validate_tight_path(const TightHypergraph& h, std::span<const Vertex> seq,
                              std::optional<ColorFilter> filter = std::nullopt,
                              const std::vector<bool>* deleted = nullptr);

// ---------------------------------------------------------------------------

namespace detail {

template <class Visit>
void walk_cycles(const LayeredGraph& g, const VertexMask* excluded, std::vector<Vertex>& path,
                 std::size_t depth, Visit& visit) {
  const int k = g.k();
  const Vertex current = path[depth - 1];
  if (depth + 1 < static_cast<std::size_t>(k)) {
    for (Vertex w : g.neighbors(current, Direction::forward)) {
      if (excluded && excluded->contains(w)) continue;
      path[depth] = w;
      walk_cycles(g, excluded, path, depth + 1, visit);
    }
    return;
  }
  // Close: last vertex is a forward neighbor of `current` and a backward
  // neighbor of the start.
  const Vertex start = path[0];
  const int close_part = g.prev_part(g.part_of(start));
  if (g.has_bitsets()) {
    const auto a = g.neighbor_bits(current, Direction::forward);
    const auto b = g.neighbor_bits(start, Direction::backward);
    const Vertex base = g.part_begin(close_part);
    const auto ex = excluded ? excluded->part_words(close_part) : std::span<const std::uint64_t>{};
    for (std::size_t w = 0; w < a.size(); ++w) {
      std::uint64_t word = a[w] & b[w];
      if (excluded) word &= ~ex[w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        word &= word - 1;
        path[depth] = base + static_cast<Vertex>(w * 64 + bit);
        visit(std::span<const Vertex>(path));
      }
    }
    return;
  }
  const auto a = g.neighbors(current, Direction::forward);
  const auto b = g.neighbors(start, Direction::backward);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      if (!(excluded && excluded->contains(*ia))) {
        path[depth] = *ia;
        visit(std::span<const Vertex>(path));
      }
      ++ia;
      ++ib;
    }
  }
}

}  // namespace detail

template <class Visit>
void for_each_cycle_through(const LayeredGraph& g, Vertex start, const VertexMask* excluded,
                            Visit&& visit) {
  if (!g.contains(start)) g.neighbors(start, Direction::forward);  // throws
  std::vector<Vertex> path(static_cast<std::size_t>(g.k()));
  path[0] = start;
  detail::walk_cycles(g, excluded, path, 1, visit);
}

}  // namespace ramsey_lab
