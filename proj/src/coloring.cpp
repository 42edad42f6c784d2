#include "ramsey_lab/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ramsey_lab/cycles.hpp"
#include "ramsey_lab/error.hpp"
#include "ramsey_lab/parallel.hpp"
#include "ramsey_lab/rng.hpp"

namespace ramsey_lab {

std::vector<std::uint64_t> Coloring::counts() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(r, 0)), 0);
  for (auto c : colors)
    if (c < out.size()) ++out[c];
  return out;
}

void Coloring::validate_for(const TightHypergraph& h) const {
  if (r < 2 || r > 256) throw InvariantError("coloring must use 2..256 colors, got r=" + std::to_string(r));
  if (colors.size() != h.edge_count())
    throw InvariantError("coloring has " + std::to_string(colors.size()) + " entries for " +
                         std::to_string(h.edge_count()) + " hyperedges");
  for (std::size_t e = 0; e < colors.size(); ++e)
    if (colors[e] >= r)
      throw InvariantError("edge " + std::to_string(e) + " has color " + std::to_string(colors[e]) +
                           " outside [0, r)");
}

int pick_majority_color(const Coloring& coloring) {
  if (coloring.colors.empty()) throw DomainError("cannot pick a majority color of an empty hypergraph");
  const auto counts = coloring.counts();
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

Coloring random_coloring(const TightHypergraph& h, int r, std::uint64_t seed, unsigned threads) {
  if (r < 2 || r > 256) throw DomainError("r must lie in [2, 256], got " + std::to_string(r));
  Coloring col{r, std::vector<std::uint8_t>(h.edge_count())};
  constexpr std::size_t kChunk = 1 << 16;
  const std::size_t chunks = (col.colors.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::size_t hi = std::min(col.colors.size(), (c + 1) * kChunk);
    for (std::size_t e = c * kChunk; e < hi; ++e)
      col.colors[e] = static_cast<std::uint8_t>(scale_below(stream_at(seed, e), static_cast<std::uint64_t>(r)));
  });
  return col;
}

AdversarialStrategy parse_strategy(std::string_view name) {
  if (name == "balanced" || name == "balanced-greedy") return AdversarialStrategy::balanced_greedy;
  if (name == "vertex-cut") return AdversarialStrategy::vertex_cut;
  if (name == "round-robin") return AdversarialStrategy::round_robin;
  throw DomainError("unknown coloring strategy '" + std::string(name) + "'");
}

std::string_view strategy_name(AdversarialStrategy strategy) {
  switch (strategy) {
    case AdversarialStrategy::balanced_greedy: return "balanced-greedy";
    case AdversarialStrategy::vertex_cut: return "vertex-cut";
    case AdversarialStrategy::round_robin: return "round-robin";
  }
  return "unknown";
}

namespace {

// Number of distinct positions j of e at which an already-colored edge of
// `color` differs from e only in its part-j vertex, capped at 2. A tight path
// through e extended by one vertex on each side needs two such positions.
int lookahead_score(const TightHypergraph& h, const std::vector<int>& assigned, EdgeId e, int color) {
  const int k = h.k();
  const auto m = h.part_size();
  const auto tuple = h.edge(e);
  std::vector<Vertex> probe(tuple.begin(), tuple.end());
  int positions = 0;
  for (int j = 0; j < k && positions < 2; ++j) {
    const auto original = probe[static_cast<std::size_t>(j)];
    bool found = false;
    for (std::uint32_t local = 0; local < m && !found; ++local) {
      const Vertex u = static_cast<Vertex>(j) * m + local;
      if (u == original) continue;
      probe[static_cast<std::size_t>(j)] = u;
      if (const auto f = h.find(probe); f && *f < e && assigned[*f] == color) found = true;
    }
    probe[static_cast<std::size_t>(j)] = original;
    if (found) ++positions;
  }
  return positions;
}

}  // namespace

Coloring adversarial_coloring(const TightHypergraph& h, int r, AdversarialStrategy strategy,
                              std::uint64_t seed) {
  if (r < 2 || r > 256) throw DomainError("r must lie in [2, 256], got " + std::to_string(r));
  const std::size_t ne = h.edge_count();
  Coloring col{r, std::vector<std::uint8_t>(ne)};
  switch (strategy) {
    case AdversarialStrategy::round_robin:
      for (std::size_t e = 0; e < ne; ++e) col.colors[e] = static_cast<std::uint8_t>(e % static_cast<std::size_t>(r));
      break;
    case AdversarialStrategy::vertex_cut: {
      const double q = 1.0 - std::pow(2.0, -1.0 / h.k());
      Rng rng(seed);
      std::vector<bool> in_s(h.vertex_count());
      for (std::size_t v = 0; v < in_s.size(); ++v) in_s[v] = rng.bernoulli(q);
      for (std::size_t e = 0; e < ne; ++e) {
        const auto t = h.edge(static_cast<EdgeId>(e));
        const bool meets = std::any_of(t.begin(), t.end(), [&](Vertex v) { return in_s[v]; });
        col.colors[e] = meets ? 0 : 1;
      }
      break;
    }
    case AdversarialStrategy::balanced_greedy: {
      std::vector<int> assigned(ne, -1);
      std::vector<std::uint64_t> used(static_cast<std::size_t>(r), 0);
      for (std::size_t e = 0; e < ne; ++e) {
        int best = 0;
        int best_score = 1 << 30;
        for (int c = 0; c < r; ++c) {
          const int score = lookahead_score(h, assigned, static_cast<EdgeId>(e), c);
          if (score < best_score ||
              (score == best_score && used[static_cast<std::size_t>(c)] < used[static_cast<std::size_t>(best)])) {
            best = c;
            best_score = score;
          }
        }
        assigned[e] = best;
        ++used[static_cast<std::size_t>(best)];
        col.colors[e] = static_cast<std::uint8_t>(best);
      }
      break;
    }
  }
  return col;
}

}  // namespace ramsey_lab
