#include "ramsey_lab/cycles.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "ramsey_lab/error.hpp"
#include "ramsey_lab/parallel.hpp"

namespace ramsey_lab {

namespace {

std::string path_string(std::span<const Vertex> vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(vs[i]);
  }
  return s + ")";
}

// Closing step of a count: |fwd(current) & bwd(start) & ~excluded|.
std::uint64_t count_closures(const LayeredGraph& g, Vertex current, Vertex start,
                             const VertexMask* excluded) {
  if (g.has_bitsets()) {
    const auto a = g.neighbor_bits(current, Direction::forward);
    const auto b = g.neighbor_bits(start, Direction::backward);
    std::uint64_t total = 0;
    if (excluded) {
      const auto ex = excluded->part_words(g.prev_part(g.part_of(start)));
      for (std::size_t w = 0; w < a.size(); ++w) total += __builtin_popcountll(a[w] & b[w] & ~ex[w]);
    } else {
      for (std::size_t w = 0; w < a.size(); ++w) total += __builtin_popcountll(a[w] & b[w]);
    }
    return total;
  }
  const auto a = g.neighbors(current, Direction::forward);
  const auto b = g.neighbors(start, Direction::backward);
  std::uint64_t total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      if (!(excluded && excluded->contains(*ia))) ++total;
      ++ia;
      ++ib;
    }
  }
  return total;
}

std::uint64_t count_walks(const LayeredGraph& g, Vertex start, Vertex current, int remaining,
                          const VertexMask* excluded) {
  if (remaining == 0) return count_closures(g, current, start, excluded);
  std::uint64_t total = 0;
  for (Vertex w : g.neighbors(current, Direction::forward)) {
    if (excluded && excluded->contains(w)) continue;
    total += count_walks(g, start, w, remaining - 1, excluded);
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Proper paths and families

ProperPath make_proper_path(const LayeredGraph& g, std::vector<Vertex> vertices) {
  const int k = g.k();
  if (vertices.empty() || vertices.size() > static_cast<std::size_t>(k - 1))
    throw DomainError("proper path must have between 1 and k-1 vertices, got " +
                      std::to_string(vertices.size()));
  for (Vertex v : vertices)
    if (!g.contains(v)) throw DomainError("unknown vertex " + std::to_string(v) + " in path");
  if (vertices.size() >= 2) {
    // Orientation is fixed by the first step; every step must continue it.
    const bool forward = g.next_part(g.part_of(vertices[0])) == g.part_of(vertices[1]);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      const int pa = g.part_of(vertices[i]), pb = g.part_of(vertices[i + 1]);
      const int expected = forward ? g.next_part(pa) : g.prev_part(pa);
      if (pb != expected || !g.adjacent(vertices[i], vertices[i + 1]))
        throw DomainError("not a proper path: " + path_string(vertices));
    }
    if (g.part_of(vertices.front()) > g.part_of(vertices.back()))
      std::reverse(vertices.begin(), vertices.end());
  }
  return ProperPath{std::move(vertices)};
}

std::vector<Vertex> TrashFamily::vertices() const {
  std::vector<Vertex> out;
  for (const auto& p : paths) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

void validate_family(const LayeredGraph& g, const TrashFamily& family) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& p : family.paths) {
    if (p.size() != static_cast<std::size_t>(g.k() - 1))
      throw InvariantError("trash path " + path_string(p.vertices) + " does not have k-1 vertices");
    try {
      make_proper_path(g, p.vertices);
    } catch (const DomainError& e) {
      throw InvariantError(e.what());
    }
    for (Vertex v : p.vertices) {
      if (seen[v])
        throw DomainError("trash family is not vertex-disjoint at vertex " + std::to_string(v));
      seen[v] = true;
    }
  }
}

// ---------------------------------------------------------------------------
// Masks and counts

VertexMask::VertexMask(const LayeredGraph& g)
    : m_(g.part_size()),
      words_((g.part_size() + 63) / 64),
      bits_(static_cast<std::size_t>(g.k()) * words_, 0) {}

VertexMask::VertexMask(const LayeredGraph& g, std::span<const Vertex> members) : VertexMask(g) {
  for (Vertex v : members) {
    if (!g.contains(v)) throw DomainError("unknown vertex " + std::to_string(v));
    insert(v);
  }
}

std::uint64_t count_cycles_through(const LayeredGraph& g, Vertex start, const VertexMask* excluded) {
  if (!g.contains(start)) throw DomainError("unknown vertex " + std::to_string(start));
  if (excluded && excluded->contains(start)) return 0;
  return count_walks(g, start, start, g.k() - 2, excluded);
}

std::uint64_t count_proper_cycles(const LayeredGraph& g, unsigned threads) {
  const std::uint32_t m = g.part_size();
  std::vector<std::uint64_t> per_start(m);
  parallel_for(m, threads, [&](std::size_t a) {
    per_start[a] = count_cycles_through(g, static_cast<Vertex>(a));
  });
  return std::accumulate(per_start.begin(), per_start.end(), std::uint64_t{0});
}

std::uint64_t cycles_through_vertex(const LayeredGraph& g, Vertex v) {
  return count_cycles_through(g, v);
}

std::vector<ProperCycle> enumerate_proper_cycles(const LayeredGraph& g, std::uint64_t cap,
                                                 unsigned threads) {
  const auto h = TightHypergraph::build(g, cap, threads);
  std::vector<ProperCycle> out(h.edge_count());
  for (std::size_t e = 0; e < out.size(); ++e) {
    const auto tuple = h.edge(static_cast<EdgeId>(e));
    out[e].by_part.assign(tuple.begin(), tuple.end());
  }
  return out;
}

std::vector<Vertex> extend_path(const LayeredGraph& g, const ProperPath& b) {
  const int k = g.k();
  if (b.size() != static_cast<std::size_t>(k - 1))
    throw DomainError("extend_path needs a proper (k-1)-path, got " + std::to_string(b.size()) +
                      " vertices");
  const auto path = make_proper_path(g, b.vertices);
  std::vector<bool> hit(static_cast<std::size_t>(k), false);
  for (Vertex v : path.vertices) hit[static_cast<std::size_t>(g.part_of(v))] = true;
  const int missing = static_cast<int>(std::find(hit.begin(), hit.end(), false) - hit.begin());
  // The endpoint in part missing+1 reaches back into `missing`; the endpoint in
  // part missing-1 reaches forward into it.
  Vertex after = path.front(), before = path.back();
  if (g.part_of(after) != g.next_part(missing)) std::swap(after, before);
  const auto a = g.neighbors(after, Direction::backward);
  const auto c = g.neighbors(before, Direction::forward);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(out));
  return out;
}

// Two vertex-disjoint (k-1)-paths cannot lie on one k-cycle (2k-2 > k), so the
// per-path extension sets below are disjoint and their sizes add up to the
// number of distinct cycles.

std::uint64_t count_family_extensions(const LayeredGraph& g, const TrashFamily& family) {
  validate_family(g, family);
  std::uint64_t total = 0;
  for (const auto& b : family.paths) total += extend_path(g, b).size();
  return total;
}

std::uint64_t count_restricted_extensions(const LayeredGraph& g, std::span<const Vertex> a,
                                          const TrashFamily& family) {
  validate_family(g, family);
  VertexMask allowed(g, a);
  for (const auto& b : family.paths)
    for (Vertex v : b.vertices) allowed.insert(v);
  std::uint64_t total = 0;
  for (const auto& b : family.paths)
    for (Vertex u : extend_path(g, b))
      if (allowed.contains(u)) ++total;
  return total;
}

std::uint64_t count_intersecting(const LayeredGraph& g, std::span<const Vertex> c) {
  std::vector<Vertex> members(c.begin(), c.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members)
    if (!g.contains(v)) throw DomainError("unknown vertex " + std::to_string(v));
  // Each intersecting cycle is counted at its smallest member of c: when it is
  // c_i's turn, the earlier members are excluded.
  VertexMask earlier(g);
  std::uint64_t total = 0;
  for (Vertex v : members) {
    total += count_cycles_through(g, v, &earlier);
    earlier.insert(v);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Hypergraph

struct TightHypergraph::Incidence {
  std::once_flag once;
  std::vector<std::uint64_t> offsets;
  std::vector<EdgeId> ids;
};

TightHypergraph::TightHypergraph(TightHypergraph&&) noexcept = default;
TightHypergraph& TightHypergraph::operator=(TightHypergraph&&) noexcept = default;
TightHypergraph::~TightHypergraph() = default;

TightHypergraph TightHypergraph::build(const LayeredGraph& g, std::uint64_t cap, unsigned threads) {
  const int k = g.k();
  const std::uint32_t m = g.part_size();
  std::vector<std::uint64_t> per_start(m);
  parallel_for(m, threads, [&](std::size_t a) {
    per_start[a] = count_cycles_through(g, static_cast<Vertex>(a));
  });
  TightHypergraph h;
  h.k_ = k;
  h.m_ = m;
  h.block_.assign(static_cast<std::size_t>(m) + 1, 0);
  for (std::uint32_t a = 0; a < m; ++a) h.block_[a + 1] = h.block_[a] + per_start[a];
  const std::uint64_t total = h.block_[m];
  if (total > cap || total > std::uint64_t{0xffffffffu})
    throw ResourceLimitError("proper cycle count " + std::to_string(total) + " exceeds the cap",
                             std::min<std::uint64_t>(cap, 0xffffffffu));
  h.flat_.resize(total * static_cast<std::uint64_t>(k));
  parallel_for(m, threads, [&](std::size_t a) {
    Vertex* out = h.flat_.data() + h.block_[a] * static_cast<std::uint64_t>(k);
    for_each_cycle_through(g, static_cast<Vertex>(a), nullptr, [&](std::span<const Vertex> walk) {
      std::copy(walk.begin(), walk.end(), out);  // start part is 0: walk order == part order
      out += k;
    });
  });
  h.incidence_ = std::make_unique<Incidence>();
  return h;
}

std::optional<EdgeId> TightHypergraph::find(std::span<const Vertex> by_part) const {
  if (by_part.size() != static_cast<std::size_t>(k_)) return std::nullopt;
  const Vertex v0 = by_part[0];
  if (v0 >= m_) return std::nullopt;
  std::uint64_t lo = block_[v0], hi = block_[v0 + 1];
  const auto ku = static_cast<std::size_t>(k_);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const Vertex* t = flat_.data() + mid * ku;
    if (std::lexicographical_compare(t, t + ku, by_part.begin(), by_part.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < block_[v0 + 1] && std::equal(by_part.begin(), by_part.end(), flat_.data() + lo * ku))
    return static_cast<EdgeId>(lo);
  return std::nullopt;
}

std::optional<EdgeId> TightHypergraph::find_set(std::span<const Vertex> vertices) const {
  if (vertices.size() != static_cast<std::size_t>(k_)) return std::nullopt;
  std::vector<Vertex> by_part(static_cast<std::size_t>(k_), 0);
  std::vector<bool> filled(static_cast<std::size_t>(k_), false);
  for (Vertex v : vertices) {
    if (v >= vertex_count()) return std::nullopt;
    const auto part = static_cast<std::size_t>(v / m_);
    if (filled[part]) return std::nullopt;
    filled[part] = true;
    by_part[part] = v;
  }
  return find(by_part);
}

const TightHypergraph::Incidence& TightHypergraph::incidence() const {
  auto& inc = *incidence_;
  std::call_once(inc.once, [&] {
    const std::size_t nv = vertex_count();
    inc.offsets.assign(nv + 1, 0);
    for (Vertex v : flat_) ++inc.offsets[v + 1];
    for (std::size_t v = 0; v < nv; ++v) inc.offsets[v + 1] += inc.offsets[v];
    inc.ids.resize(flat_.size());
    std::vector<std::uint64_t> cursor(inc.offsets.begin(), inc.offsets.end() - 1);
    const std::size_t ne = edge_count();
    for (std::size_t e = 0; e < ne; ++e)
      for (Vertex v : edge(static_cast<EdgeId>(e))) inc.ids[cursor[v]++] = static_cast<EdgeId>(e);
  });
  return inc;
}

std::span<const EdgeId> TightHypergraph::incident(Vertex v) const {
  if (v >= vertex_count()) throw DomainError("unknown vertex " + std::to_string(v));
  const auto& inc = incidence();
  return {inc.ids.data() + inc.offsets[v], static_cast<std::size_t>(inc.offsets[v + 1] - inc.offsets[v])};
}

void TightHypergraph::check_source(const LayeredGraph& g) const {
  if (g.k() != k_ || g.part_size() != m_)
    throw InvariantError("hypergraph and graph shapes differ");
  if (count_proper_cycles(g) != edge_count())
    throw InvariantError("hypergraph edge count differs from the graph's proper cycle count");
}

// ---------------------------------------------------------------------------

std::string_view defect_name(PathDefect defect) {
  switch (defect) {
    case PathDefect::none: return "none";
    case PathDefect::too_short: return "too_short";
    case PathDefect::unknown_vertex: return "unknown_vertex";
    case PathDefect::repeated_vertex: return "repeated_vertex";
    case PathDefect::not_a_hyperedge: return "not_a_hyperedge";
    case PathDefect::wrong_color: return "wrong_color";
    case PathDefect::deleted_edge: return "deleted_edge";
  }
  return "unknown";
}

PathCheck validate_tight_path(const TightHypergraph& h, std::span<const Vertex> seq,
                              std::optional<ColorFilter> filter, const std::vector<bool>* deleted) {
  const auto k = static_cast<std::size_t>(h.k());
  if (seq.size() < k || k == 0) return {false, PathDefect::too_short, seq.size()};
  std::vector<bool> seen(h.vertex_count(), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= h.vertex_count()) return {false, PathDefect::unknown_vertex, i};
    if (seen[seq[i]]) return {false, PathDefect::repeated_vertex, i};
    seen[seq[i]] = true;
  }
  for (std::size_t i = 0; i + k <= seq.size(); ++i) {
    const auto id = h.find_set(seq.subspan(i, k));
    if (!id) return {false, PathDefect::not_a_hyperedge, i};
    if (filter && filter->coloring && (*filter->coloring)[*id] != filter->color)
      return {false, PathDefect::wrong_color, i};
    if (deleted && (*deleted)[*id]) return {false, PathDefect::deleted_edge, i};
  }
  return {true, PathDefect::none, 0};
}

}  // namespace ramsey_lab
