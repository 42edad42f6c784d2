#include "ramsey_lab/greedy.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ramsey_lab/error.hpp"
#include "ramsey_lab/rng.hpp"

namespace ramsey_lab {

std::string_view round_kind_name(RoundResult::Kind kind) {
  switch (kind) {
    case RoundResult::Kind::path_found: return "path_found";
    case RoundResult::Kind::trash_full: return "trash_full";
    case RoundResult::Kind::no_edge_in_unused: return "no_edge_in_unused";
  }
  return "unknown";
}

namespace {

enum class Slot : std::uint8_t { unused, path, trash };

void check_inputs(const TightHypergraph& h, const LayeredGraph& g, const Coloring& coloring,
                  std::size_t n, const EdgeFlags* deleted) {
  if (h.k() != g.k() || h.part_size() != g.part_size())
    throw InvariantError("hypergraph was not built from this graph");
  coloring.validate_for(h);
  if (n < static_cast<std::size_t>(h.k()))
    throw DomainError("target path length n must be at least k, got " + std::to_string(n));
  if (deleted && deleted->size() != h.edge_count())
    throw InvariantError("deleted-edge flags do not match the hypergraph");
}

class RoundMachine {
 public:
  RoundMachine(const TightHypergraph& h, const LayeredGraph& g, const Coloring& coloring, int color,
               std::size_t n, const EdgeFlags& deleted, const GreedyOptions& options)
      : h_(h),
        g_(g),
        coloring_(coloring),
        color_(color),
        n_(n),
        deleted_(deleted),
        options_(options),
        k_(static_cast<std::size_t>(g.k())),
        slot_(g.vertex_count(), Slot::unused),
        rng_(options.seed),
        probe_(k_) {}

  RoundResult run() {
    for (;;) {
      const auto start = start_edge();
      if (!start) return finish(RoundResult::Kind::no_edge_in_unused);
      for (Vertex v : h_.edge(*start)) {
        path_.push_back(v);
        slot_[v] = Slot::path;
      }
      check();
      if (path_.size() >= n_) return finish(RoundResult::Kind::path_found);

      for (;;) {
        if (const auto u = extension()) {
          path_.push_back(*u);
          slot_[*u] = Slot::path;
          check();
          if (path_.size() >= n_) return finish(RoundResult::Kind::path_found);
          continue;
        }
        std::vector<Vertex> tail(path_.end() - static_cast<std::ptrdiff_t>(k_ - 1), path_.end());
        path_.resize(path_.size() - (k_ - 1));
        for (Vertex v : tail) slot_[v] = Slot::trash;
        trash_.paths.push_back(make_proper_path(g_, std::move(tail)));
        check();
        if (trash_.size() >= n_) return finish(RoundResult::Kind::trash_full);
        if (path_.size() < k_) {
          for (Vertex v : path_) slot_[v] = Slot::unused;
          path_.clear();
          break;
        }
      }
    }
  }

 private:
  bool eligible(EdgeId e) const { return coloring_[e] == color_ && !deleted_[e]; }

  bool all_unused(EdgeId e) const {
    const auto t = h_.edge(e);
    return std::all_of(t.begin(), t.end(), [&](Vertex v) { return slot_[v] == Slot::unused; });
  }

  std::optional<EdgeId> scan(std::uint64_t lo, std::uint64_t hi) const {
    std::uint64_t e = lo;
    while (e < hi) {
      const Vertex v0 = h_.edge(static_cast<EdgeId>(e))[0];
      if (slot_[v0] != Slot::unused) {
        e = h_.block_of(v0).second;
        continue;
      }
      const auto id = static_cast<EdgeId>(e);
      if (eligible(id) && all_unused(id)) return id;
      ++e;
    }
    return std::nullopt;
  }

  std::optional<EdgeId> start_edge() {
    const std::uint64_t total = h_.edge_count();
    if (total == 0) return std::nullopt;
    if (options_.policy == ChoicePolicy::lexicographic) return scan(0, total);
    const std::uint64_t s = rng_.below(total);
    if (auto e = scan(s, total)) return e;
    return scan(0, s);
  }

  // Unused u in the part missed by the tail, adjacent to the last vertex and
  // to the (k-1)-back vertex, whose edge with the tail is eligible.
  std::optional<Vertex> extension() {
    const Vertex last = path_.back();
    const Vertex back = path_[path_.size() - (k_ - 1)];
    for (std::size_t i = path_.size() - (k_ - 1); i < path_.size(); ++i)
      probe_[static_cast<std::size_t>(g_.part_of(path_[i]))] = path_[i];
    const auto missing = static_cast<std::size_t>(g_.next_part(g_.part_of(last)));
    const auto a = g_.neighbors(last, Direction::forward);
    const auto b = g_.neighbors(back, Direction::backward);
    candidates_.clear();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        const Vertex u = *ia;
        ++ia;
        ++ib;
        if (slot_[u] != Slot::unused) continue;
        probe_[missing] = u;
        const auto id = h_.find(probe_);
        if (!id || !eligible(*id)) continue;
        if (options_.policy == ChoicePolicy::lexicographic) return u;
        candidates_.push_back(u);
      }
    }
    if (candidates_.empty()) return std::nullopt;
    return candidates_[rng_.below(candidates_.size())];
  }

  RoundResult finish(RoundResult::Kind kind) {
    RoundResult out;
    out.kind = kind;
    out.path = std::move(path_);
    out.trash = std::move(trash_);
    return out;
  }

  void check() const {
    if (!options_.check_invariants) return;
    if (path_.size() >= k_) {
      const auto verdict = validate_tight_path(h_, path_, ColorFilter{&coloring_, color_}, &deleted_);
      if (!verdict)
        throw InvariantError("greedy path violates the window invariant: " +
                             std::string(defect_name(verdict.defect)) + " at " +
                             std::to_string(verdict.position));
    }
    if (path_.size() >= k_ - 1 && !path_.empty())
      make_proper_path(g_, std::vector<Vertex>(path_.end() - static_cast<std::ptrdiff_t>(k_ - 1), path_.end()));
    if (trash_.size() > n_) throw InvariantError("trash family exceeds n paths");
    validate_family(g_, trash_);
    std::size_t on_path = 0, in_trash = 0;
    for (Slot s : slot_) {
      on_path += s == Slot::path;
      in_trash += s == Slot::trash;
    }
    if (on_path != path_.size() || in_trash != trash_.size() * (k_ - 1))
      throw InvariantError("path, trash and unused vertices do not partition the vertex set");
    for (Vertex v : path_)
      if (slot_[v] != Slot::path) throw InvariantError("path vertex not marked");
    for (const auto& p : trash_.paths)
      for (Vertex v : p.vertices)
        if (slot_[v] != Slot::trash) throw InvariantError("trash vertex not marked");
  }

  const TightHypergraph& h_;
  const LayeredGraph& g_;
  const Coloring& coloring_;
  int color_;
  std::size_t n_;
  const EdgeFlags& deleted_;
  GreedyOptions options_;
  std::size_t k_;
  std::vector<Slot> slot_;
  std::vector<Vertex> path_;
  TrashFamily trash_;
  Rng rng_;
  std::vector<Vertex> probe_;
  std::vector<Vertex> candidates_;
};

std::uint64_t delete_extensions(const TightHypergraph& h, const LayeredGraph& g,
                                const Coloring& coloring, int color, const TrashFamily& trash,
                                EdgeFlags& deleted) {
  std::uint64_t removed = 0;
  std::vector<Vertex> probe(static_cast<std::size_t>(g.k()));
  for (const auto& b : trash.paths) {
    for (Vertex v : b.vertices) probe[static_cast<std::size_t>(g.part_of(v))] = v;
    for (Vertex u : extend_path(g, b)) {
      probe[static_cast<std::size_t>(g.part_of(u))] = u;
      const auto id = h.find(probe);
      if (!id) throw InvariantError("extension of a trash path is missing from the hypergraph");
      if (coloring[*id] == color && !deleted[*id]) {
        deleted[*id] = true;
        ++removed;
      }
    }
  }
  return removed;
}

}  // namespace

RoundResult greedy_round(const TightHypergraph& h, const LayeredGraph& g, const Coloring& coloring,
                         int color, std::size_t n, const EdgeFlags& deleted,
                         const GreedyOptions& options) {
  check_inputs(h, g, coloring, n, &deleted);
  if (color < 0 || color >= coloring.r)
    throw DomainError("working color " + std::to_string(color) + " outside [0, r)");
  return RoundMachine(h, g, coloring, color, n, deleted, options).run();
}

GreedyOutcome run_outer(const TightHypergraph& h, const LayeredGraph& g, const Coloring& coloring,
                        std::size_t n, const GreedyOptions& options) {
  check_inputs(h, g, coloring, n, nullptr);
  const int color = coloring.size() == 0 ? 0 : pick_majority_color(coloring);
  EdgeFlags deleted(h.edge_count(), false);
  std::vector<CertificateRound> rounds;
  // Every trash_full round deletes at least the edge that closed each trashed
  // tail, so the loop ends after at most e_b / n rounds.
  for (std::size_t round = 0;; ++round) {
    GreedyOptions round_options = options;
    round_options.seed = derive_seed(options.seed, round);
    auto result = RoundMachine(h, g, coloring, color, n, deleted, round_options).run();
    switch (result.kind) {
      case RoundResult::Kind::path_found:
        return PathOutcome{color, std::move(result.path), round};
      case RoundResult::Kind::trash_full: {
        const auto removed = delete_extensions(h, g, coloring, color, result.trash, deleted);
        if (removed == 0) throw InvariantError("a trash_full round removed no edges");
        rounds.push_back({std::move(result.path), std::move(result.trash), removed});
        break;
      }
      case RoundResult::Kind::no_edge_in_unused: {
        Certificate cert;
        cert.color = color;
        cert.n = n;
        cert.rounds = std::move(rounds);
        cert.final_trash = std::move(result.trash);
        cert.intersecting_set = cert.final_trash.vertices();
        cert.audit = audit_certificate(cert, h, g, coloring);
        return cert;
      }
    }
  }
}

CertificateAudit audit_certificate(const Certificate& certificate, const TightHypergraph& h,
                                   const LayeredGraph& g, const Coloring& coloring) {
  check_inputs(h, g, coloring, certificate.n, nullptr);
  CertificateAudit audit;
  audit.k = g.k();
  audit.r = coloring.r;
  audit.color = certificate.color;
  const auto kr2 = static_cast<std::uint64_t>(2 * audit.k * audit.r);

  audit.all_property_i = true;
  std::set<ProperPath> seen_paths;
  audit.families_disjoint = true;
  auto note_family = [&](const TrashFamily& fam) {
    for (const auto& p : fam.paths)
      if (!seen_paths.insert(p).second) audit.families_disjoint = false;
  };
  for (const auto& round : certificate.rounds) {
    RoundAudit ra;
    ra.y = count_restricted_extensions(g, round.path_snapshot, round.trash);
    ra.t_b = count_family_extensions(g, round.trash);
    ra.deleted = round.deleted_edges;
    ra.property_i = kr2 * ra.y < ra.t_b;
    ra.margin_i = static_cast<double>(ra.t_b) / static_cast<double>(kr2) - static_cast<double>(ra.y);
    audit.all_property_i = audit.all_property_i && ra.property_i;
    audit.sum_y += ra.y;
    audit.sum_t_b += ra.t_b;
    audit.rounds.push_back(ra);
    note_family(round.trash);
  }
  note_family(certificate.final_trash);

  audit.z_c = count_intersecting(g, certificate.intersecting_set);
  audit.t_k = count_proper_cycles(g);
  if (audit.t_k != h.edge_count())
    throw InvariantError("hypergraph edge count differs from the graph's proper cycle count");
  audit.edges = h.edge_count();
  audit.e_b = coloring.counts()[static_cast<std::size_t>(certificate.color)];

  const auto r = static_cast<std::uint64_t>(audit.r);
  const auto k = static_cast<std::uint64_t>(audit.k);
  audit.accounting = audit.e_b <= audit.sum_y + audit.z_c;
  audit.property_ii = 2 * r * audit.z_c < audit.t_k;
  audit.margin_ii = static_cast<double>(audit.t_k) / static_cast<double>(2 * r) - static_cast<double>(audit.z_c);
  audit.extension_budget = audit.sum_t_b <= k * audit.t_k;
  audit.minority = r * audit.e_b < audit.edges;
  audit.margin_minority = static_cast<double>(audit.edges) / static_cast<double>(r) - static_cast<double>(audit.e_b);
  return audit;
}

}  // namespace ramsey_lab
