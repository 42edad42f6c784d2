#pragma once

// Reference computations for the tests. These deliberately share no code with
// the library: adjacency is a plain set of pairs and cycles are found by
// trying every tuple.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ramsey_lab/cycles.hpp"

namespace ref {

using ramsey_lab::Vertex;

struct Graph {
  int k = 0;
  std::uint32_t m = 0;
  std::set<std::pair<Vertex, Vertex>> adj;  // both orientations

  explicit Graph(const ramsey_lab::LayeredGraph& g) : k(g.k()), m(g.part_size()) {
    for (auto [u, v] : g.edges()) {
      adj.insert({u, v});
      adj.insert({v, u});
    }
  }
  bool edge(Vertex u, Vertex v) const { return adj.count({u, v}) > 0; }
  Vertex at(int part, std::uint32_t local) const { return static_cast<Vertex>(part) * m + local; }
};

/// Every tuple (x_0..x_{k-1}), x_i in part i, with x_i ~ x_{i+1} cyclically.
inline std::vector<std::vector<Vertex>> cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<std::uint32_t> idx(g.k, 0);
  while (true) {
    std::vector<Vertex> t(g.k);
    for (int i = 0; i < g.k; ++i) t[i] = g.at(i, idx[i]);
    bool ok = true;
    for (int i = 0; i < g.k && ok; ++i) ok = g.edge(t[i], t[(i + 1) % g.k]);
    if (ok) out.push_back(t);
    int i = g.k - 1;
    while (i >= 0 && ++idx[i] == g.m) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

/// Checks every k-window of `seq` is a distinct-vertex proper cycle of the
/// given color. Uses the reference adjacency; the hypergraph only supplies ids.
inline bool is_tight_path(const Graph& g, const ramsey_lab::TightHypergraph& h,
                          const ramsey_lab::Coloring& col, int color,
                          const std::vector<Vertex>& seq) {
  if (seq.size() < static_cast<std::size_t>(g.k)) return false;
  std::set<Vertex> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) return false;
  for (std::size_t s = 0; s + g.k <= seq.size(); ++s) {
    std::vector<Vertex> by_part(g.k, ~0u);
    for (int j = 0; j < g.k; ++j) {
      const Vertex v = seq[s + j];
      const int part = static_cast<int>(v / g.m);
      if (by_part[part] != ~0u) return false;
      by_part[part] = v;
    }
    for (int i = 0; i < g.k; ++i)
      if (!g.edge(by_part[i], by_part[(i + 1) % g.k])) return false;
    auto e = h.find(by_part);
    if (!e || col[*e] != color) return false;
  }
  return true;
}

}  // namespace ref
