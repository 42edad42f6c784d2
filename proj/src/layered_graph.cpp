#include "ramsey_lab/layered_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ramsey_lab/error.hpp"
#include "ramsey_lab/rng.hpp"

namespace ramsey_lab {

void GraphParams::validate() const {
  if (k < 3) throw DomainError("k must be at least 3, got " + std::to_string(k));
  if (part_size < 1) throw DomainError("part_size must be at least 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw DomainError("edge_prob must lie in [0, 1], got " + std::to_string(edge_prob));
}

PaperParams paper_params(int k, int r, std::uint64_t n) {
  if (k < 3) throw DomainError("k must be at least 3, got " + std::to_string(k));
  if (r < 2) throw DomainError("r must be at least 2, got " + std::to_string(r));
  if (n < static_cast<std::uint64_t>(k))
    throw DomainError("n must be at least k, got n=" + std::to_string(n));
  PaperParams pp;
  pp.k = k;
  pp.r = r;
  pp.n = n;
  pp.c = 16ULL * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k) *
         static_cast<std::uint64_t>(r);
  const double nd = static_cast<double>(n);
  pp.p = std::sqrt(std::log(nd) / nd);
  pp.part_size = pp.c * n;
  return pp;
}

namespace {

void build_csr(std::size_t vertices, std::span<const Edge> arcs, bool by_first,
               std::vector<std::uint64_t>& offsets, std::vector<Vertex>& targets) {
  offsets.assign(vertices + 1, 0);
  for (const auto& [from, to] : arcs) ++offsets[(by_first ? from : to) + 1];
  for (std::size_t v = 0; v < vertices; ++v) offsets[v + 1] += offsets[v];
  targets.resize(arcs.size());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [from, to] : arcs) {
    if (by_first)
      targets[cursor[from]++] = to;
    else
      targets[cursor[to]++] = from;
  }
  for (std::size_t v = 0; v < vertices; ++v)
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
}

}  // namespace

LayeredGraph::LayeredGraph(int k, std::uint32_t part_size, std::span<const Edge> edges,
                           GraphOptions options)
    : k_(k), m_(part_size) {
  GraphParams{k, part_size, 0.0, 0}.validate();
  const std::size_t n = vertex_count();

  // Orient every edge from its part i endpoint to its part i+1 endpoint.
  std::vector<Edge> arcs;
  arcs.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (!contains(a) || !contains(b))
      throw DomainError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") has an endpoint outside the vertex range");
    const int pa = part_of(a), pb = part_of(b);
    if (next_part(pa) == pb)
      arcs.emplace_back(a, b);
    else if (next_part(pb) == pa)
      arcs.emplace_back(b, a);
    else
      throw DomainError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") does not join consecutive parts");
  }
  build_csr(n, arcs, true, fwd_offsets_, fwd_targets_);
  build_csr(n, arcs, false, bwd_offsets_, bwd_targets_);
  for (std::size_t v = 0; v < n; ++v) {
    const auto first = fwd_targets_.begin() + static_cast<std::ptrdiff_t>(fwd_offsets_[v]);
    const auto last = fwd_targets_.begin() + static_cast<std::ptrdiff_t>(fwd_offsets_[v + 1]);
    if (std::adjacent_find(first, last) != last)
      throw DomainError("duplicate edge at vertex " + std::to_string(v));
  }
  edge_count_ = arcs.size();

  words_ = (m_ + 63) / 64;
  if (m_ <= options.bitset_threshold) {
    has_bits_ = true;
    fwd_bits_.assign(n * words_, 0);
    bwd_bits_.assign(n * words_, 0);
    for (const auto& [from, to] : arcs) {
      const auto lt = local_index(to), lf = local_index(from);
      fwd_bits_[static_cast<std::size_t>(from) * words_ + lt / 64] |= 1ULL << (lt % 64);
      bwd_bits_[static_cast<std::size_t>(to) * words_ + lf / 64] |= 1ULL << (lf % 64);
    }
  }
}

std::span<const Vertex> LayeredGraph::neighbors(Vertex v, Direction direction) const {
  if (!contains(v)) throw DomainError("unknown vertex " + std::to_string(v));
  const auto& offsets = direction == Direction::forward ? fwd_offsets_ : bwd_offsets_;
  const auto& targets = direction == Direction::forward ? fwd_targets_ : bwd_targets_;
  return {targets.data() + offsets[v], static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
}

bool LayeredGraph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  Direction d;
  if (next_part(part_of(u)) == part_of(v))
    d = Direction::forward;
  else if (prev_part(part_of(u)) == part_of(v))
    d = Direction::backward;
  else
    return false;
  const auto list = neighbors(u, d);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> LayeredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex w : neighbors(v, Direction::forward)) out.emplace_back(std::min(v, w), std::max(v, w));
  std::sort(out.begin(), out.end());
  return out;
}

LayeredGraph generate_random(const GraphParams& params, GraphOptions options) {
  params.validate();
  const std::uint64_t m = params.part_size;
  std::vector<Edge> edges;
  std::uint64_t index = 0;
  for (int i = 0; i < params.k; ++i) {
    const Vertex base = static_cast<Vertex>(i * m);
    const Vertex next_base = static_cast<Vertex>(((i + 1) % params.k) * m);
    for (std::uint64_t a = 0; a < m; ++a)
      for (std::uint64_t b = 0; b < m; ++b, ++index)
        if (to_unit(stream_at(params.seed, index)) < params.edge_prob)
          edges.emplace_back(base + static_cast<Vertex>(a), next_base + static_cast<Vertex>(b));
  }
  return LayeredGraph(params.k, params.part_size, edges, options);
}

LayeredGraph complete_layered(int k, std::uint32_t part_size, GraphOptions options) {
  GraphParams{k, part_size, 1.0, 0}.validate();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * part_size * part_size);
  for (int i = 0; i < k; ++i)
    for (std::uint32_t a = 0; a < part_size; ++a)
      for (std::uint32_t b = 0; b < part_size; ++b)
        edges.emplace_back(static_cast<Vertex>(i) * part_size + a,
                           static_cast<Vertex>((i + 1) % k) * part_size + b);
  return LayeredGraph(k, part_size, edges, options);
}

LayeredGraph with_edge(const LayeredGraph& g, Edge extra) {
  auto edges = g.edges();
  edges.push_back(extra);
  return LayeredGraph(g.k(), g.part_size(), edges);
}

}  // namespace ramsey_lab
