#include "ramsey_lab/oracle.hpp"

#include <algorithm>
#include <string>

#include "ramsey_lab/error.hpp"
#include "ramsey_lab/parallel.hpp"

namespace ramsey_lab {

std::vector<ProperCycle> brute_force_cycles(const LayeredGraph& g, std::uint64_t cap) {
  const int k = g.k();
  const std::uint64_t m = g.part_size();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > cap / m) throw ResourceLimitError("brute force tuple count m^k exceeds the cap", cap);
    total *= m;
  }
  if (total > cap) throw ResourceLimitError("brute force tuple count m^k exceeds the cap", cap);
  std::vector<ProperCycle> out;
  std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
  std::vector<Vertex> tuple(static_cast<std::size_t>(k));
  for (std::uint64_t iter = 0; iter < total; ++iter) {
    for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = g.part_begin(i) + digit[static_cast<std::size_t>(i)];
    bool closed = true;
    for (int i = 0; i < k && closed; ++i)
      closed = g.adjacent(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>((i + 1) % k)]);
    if (closed) out.push_back(ProperCycle{tuple});
    for (int i = k - 1; i >= 0; --i) {
      if (++digit[static_cast<std::size_t>(i)] < m) break;
      digit[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

class PathSearcher {
 public:
  PathSearcher(const TightHypergraph& h, const Coloring& coloring, int color, std::size_t n,
               std::uint64_t cap)
      : h_(h), coloring_(coloring), color_(color), n_(n), cap_(cap), k_(static_cast<std::size_t>(h.k())),
        used_(h.vertex_count(), false) {}

  PathSearch run() {
    PathSearch out;
    for (std::size_t e = 0; e < h_.edge_count() && !found_ && !capped_; ++e) {
      if (coloring_[e] != color_) continue;
      const auto t = h_.edge(static_cast<EdgeId>(e));
      std::vector<Vertex> order(t.begin(), t.end());  // ascending ids == part order
      do {
        seq_ = order;
        for (Vertex v : seq_) used_[v] = true;
        extend();
        for (Vertex v : seq_) used_[v] = false;
      } while (!found_ && !capped_ && std::next_permutation(order.begin(), order.end()));
    }
    out.states = states_;
    if (found_) {
      out.verdict = Verdict::yes;
      out.witness = witness_;
    } else {
      out.verdict = capped_ ? Verdict::unknown : Verdict::no;
    }
    return out;
  }

 private:
  void extend() {
    if (++states_ > cap_) {
      capped_ = true;
      return;
    }
    if (seq_.size() >= n_) {
      found_ = true;
      witness_ = seq_;
      return;
    }
    // Edges containing the last k-1 vertices, of the working color.
    const auto tail = std::span<const Vertex>(seq_).last(k_ - 1);
    for (EdgeId e : h_.incident(seq_.back())) {
      if (coloring_[e] != color_) continue;
      const auto t = h_.edge(e);
      Vertex extra = 0;
      std::size_t outside = 0;
      for (Vertex v : t) {
        if (std::find(tail.begin(), tail.end(), v) == tail.end()) {
          extra = v;
          ++outside;
        }
      }
      if (outside != 1 || used_[extra]) continue;
      seq_.push_back(extra);
      used_[extra] = true;
      extend();
      used_[extra] = false;
      seq_.pop_back();
      if (found_ || capped_) return;
    }
  }

  const TightHypergraph& h_;
  const Coloring& coloring_;
  int color_;
  std::size_t n_;
  std::uint64_t cap_;
  std::size_t k_;
  std::vector<bool> used_;
  std::vector<Vertex> seq_;
  std::vector<Vertex> witness_;
  std::uint64_t states_ = 0;
  bool found_ = false;
  bool capped_ = false;
};

}  // namespace

PathSearch tight_path_exists(const TightHypergraph& h, const Coloring& coloring, int color,
                             std::size_t n, std::uint64_t state_cap) {
  coloring.validate_for(h);
  if (n < static_cast<std::size_t>(h.k()))
    throw DomainError("tight path length must be at least k");
  return PathSearcher(h, coloring, color, n, state_cap).run();
}

ArrowResult arrow_check(const TightHypergraph& h, std::size_t n, int r, std::uint64_t coloring_cap,
                        std::uint64_t state_cap, unsigned threads) {
  if (r < 2 || r > 256) throw DomainError("r must lie in [2, 256]");
  if (n < static_cast<std::size_t>(h.k())) throw DomainError("tight path length must be at least k");
  const std::size_t ne = h.edge_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ne; ++i) {
    if (total > coloring_cap / static_cast<std::uint64_t>(r))
      throw ResourceLimitError("r^|E| colorings exceed the cap", coloring_cap);
    total *= static_cast<std::uint64_t>(r);
  }
  ArrowResult out;
  if (ne == 0) {
    // The single empty coloring has no monochromatic edge at all.
    out.verdict = Verdict::no;
    out.counterexample = Coloring{r, {}};
    out.colorings_checked = 1;
    return out;
  }
  (void)h.incident(0);  // build the index before workers share it

  // Chunks fix the colors of edges 1..prefix; edge 0 is always color 0.
  const std::size_t free_edges = ne - 1;
  const std::size_t prefix = std::min<std::size_t>(free_edges, 4);
  std::uint64_t chunks = 1;
  for (std::size_t i = 0; i < prefix; ++i) chunks *= static_cast<std::uint64_t>(r);

  struct ChunkResult {
    std::optional<Coloring> counterexample;
    bool unknown = false;
    std::uint64_t checked = 0;
  };
  std::vector<ChunkResult> results(chunks);

  parallel_for(chunks, threads, [&](std::size_t chunk) {
    Coloring col{r, std::vector<std::uint8_t>(ne, 0)};
    std::uint64_t code = chunk;
    for (std::size_t i = prefix; i >= 1; --i) {
      col.colors[i] = static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(r));
      code /= static_cast<std::uint64_t>(r);
    }
    ChunkResult& res = results[chunk];
    for (;;) {
      ++res.checked;
      bool has_path = false;
      bool unknown = false;
      for (int c = 0; c < r && !has_path; ++c) {
        const auto search = PathSearcher(h, col, c, n, state_cap).run();
        if (search.verdict == Verdict::yes) has_path = true;
        if (search.verdict == Verdict::unknown) unknown = true;
      }
      if (!has_path && !unknown) {
        res.counterexample = col;
        return;
      }
      if (!has_path) res.unknown = true;
      // Odometer over edges prefix+1..ne-1, last edge least significant.
      bool advanced = false;
      for (std::size_t i = ne; i-- > prefix + 1;) {
        if (++col.colors[i] < r) {
          advanced = true;
          break;
        }
        col.colors[i] = 0;
      }
      if (!advanced) return;
    }
  });

  for (const auto& res : results) out.colorings_checked += res.checked;
  bool unknown = false;
  for (const auto& res : results) {
    if (res.counterexample) {
      out.verdict = Verdict::no;
      out.counterexample = res.counterexample;
      return out;
    }
    unknown = unknown || res.unknown;
  }
  out.verdict = unknown ? Verdict::unknown : Verdict::yes;
  return out;
}

}  // namespace ramsey_lab
