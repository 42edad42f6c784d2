#include <algorithm>
#include <set>

#include "doctest.h"
#include "ramsey_lab/cycles.hpp"
#include "ramsey_lab/error.hpp"
#include "ramsey_lab/oracle.hpp"
#include "support.hpp"

using namespace ramsey_lab;

namespace {

std::vector<std::vector<Vertex>> as_tuples(const std::vector<ProperCycle>& cs) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cs) out.push_back(c.by_part);
  std::sort(out.begin(), out.end());
  return out;
}

// Cycles of the reference enumeration that contain a (k-1)-path b and one more
// vertex from `allowed` (all vertices when allowed is empty).
std::uint64_t ref_extensions(const ref::Graph& rg, const std::vector<Vertex>& b,
                             const std::set<Vertex>* allowed) {
  std::uint64_t n = 0;
  for (const auto& c : ref::cycles(rg)) {
    std::set<Vertex> cs(c.begin(), c.end());
    if (!std::all_of(b.begin(), b.end(), [&](Vertex v) { return cs.count(v); })) continue;
    // b must be a path inside the cycle: consecutive parts, so it holds
    // automatically once all of b lies in the k-cycle.
    Vertex extra = 0;
    for (Vertex v : c)
      if (std::find(b.begin(), b.end(), v) == b.end()) extra = v;
    if (!allowed || allowed->count(extra)) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("enumeration matches the reference on small random graphs") {
  for (int k : {3, 4, 5})
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const auto g = generate_random({k, 4, 0.6, seed});
      const auto want = ref::cycles(ref::Graph(g));
      CHECK(as_tuples(enumerate_proper_cycles(g)) == want);
      CHECK(as_tuples(brute_force_cycles(g)) == want);
      CHECK(count_proper_cycles(g) == want.size());
      CHECK(count_proper_cycles(g, 3) == want.size());
    }
}

TEST_CASE("complete layered graph closed forms") {
  for (int k : {3, 4, 5, 6})
    for (std::uint32_t m : {1u, 2u, 3u}) {
      const auto g = complete_layered(k, m);
      std::uint64_t mk = 1;
      for (int i = 0; i < k; ++i) mk *= m;
      CHECK(count_proper_cycles(g) == mk);
      for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(cycles_through_vertex(g, v) == mk / m);
    }
}

TEST_CASE("handshake: sum of X_v equals k t_k") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = generate_random({4, 7, 0.5, seed});
    std::uint64_t sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum += cycles_through_vertex(g, v);
    CHECK(sum == 4 * count_proper_cycles(g));
  }
}

TEST_CASE("adding an edge never lowers t_k") {
  auto g = generate_random({3, 5, 0.4, 11});
  std::uint64_t last = count_proper_cycles(g);
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = 5; b < 10; ++b)
      if (!g.adjacent(a, b)) {
        g = with_edge(g, {a, b});
        const auto now = count_proper_cycles(g);
        CHECK(now >= last);
        last = now;
      }
}

TEST_CASE("z_C counts each intersecting cycle once") {
  const auto g = generate_random({4, 5, 0.6, 3});
  const ref::Graph rg(g);
  const auto all = ref::cycles(rg);
  const std::vector<std::vector<Vertex>> sets{{}, {0}, {0, 1, 5}, {3, 8, 12, 17, 19}, {0, 0, 1}};
  for (const auto& c : sets) {
    std::uint64_t want = 0;
    for (const auto& cyc : all)
      want += std::any_of(cyc.begin(), cyc.end(),
                          [&](Vertex v) { return std::find(c.begin(), c.end(), v) != c.end(); });
    CHECK(count_intersecting(g, c) == want);
  }
  std::vector<Vertex> everything(g.vertex_count());
  for (Vertex v = 0; v < everything.size(); ++v) everything[v] = v;
  CHECK(count_intersecting(g, everything) == all.size());
}

TEST_CASE("t_B and y_AB against the reference") {
  const auto g = generate_random({4, 6, 0.7, 8});
  const ref::Graph rg(g);
  // Collect a few disjoint proper 3-paths (k-1 = 3) from cycles, each starting
  // in a different part.
  TrashFamily fam;
  std::set<Vertex> used;
  for (const auto& c : ref::cycles(rg)) {
    if (fam.size() == 3) break;
    const int shift = static_cast<int>(fam.size());
    std::vector<Vertex> b;
    for (int j = 0; j < 3; ++j) b.push_back(c[(shift + j) % 4]);
    if (std::any_of(b.begin(), b.end(), [&](Vertex v) { return used.count(v); })) continue;
    used.insert(b.begin(), b.end());
    fam.paths.push_back(make_proper_path(g, b));
  }
  REQUIRE(fam.size() == 3);
  std::uint64_t t_b = 0;
  for (const auto& b : fam.paths) {
    CHECK(extend_path(g, b).size() == ref_extensions(rg, b.vertices, nullptr));
    t_b += ref_extensions(rg, b.vertices, nullptr);
  }
  CHECK(count_family_extensions(g, fam) == t_b);

  const std::vector<Vertex> a{1, 7, 13, 19, 20};
  std::set<Vertex> allowed(a.begin(), a.end());
  allowed.insert(used.begin(), used.end());
  std::uint64_t y = 0;
  for (const auto& b : fam.paths) y += ref_extensions(rg, b.vertices, &allowed);
  CHECK(count_restricted_extensions(g, a, fam) == y);
  CHECK(y <= t_b);
  CHECK(count_restricted_extensions(g, {}, TrashFamily{}) == 0);
}

TEST_CASE("proper paths are validated and normalized") {
  const auto g = complete_layered(4, 2);
  // 5 (part 2), 3 (part 1), 1 (part 0) is the reverse of a proper path.
  const auto p = make_proper_path(g, {5, 3, 1});
  CHECK(p.vertices == std::vector<Vertex>{1, 3, 5});
  // Wrap-around path: parts 3, 0, 1.
  const auto w = make_proper_path(g, {6, 0, 2});
  CHECK(w.size() == 3);
  CHECK_THROWS_AS(make_proper_path(g, {0, 4, 6}), DomainError);  // parts 0, 2, 3
  CHECK_THROWS_AS(make_proper_path(complete_layered(4, 2), {0, 2, 4, 6}), DomainError);
  TrashFamily overlapping{{make_proper_path(g, {0, 2, 4}), make_proper_path(g, {0, 3, 5})}};
  CHECK_THROWS_AS(validate_family(g, overlapping), DomainError);
}

TEST_CASE("hypergraph lookups") {
  const auto g = generate_random({3, 6, 0.6, 21});
  const auto h = build_hypergraph(g);
  h.check_source(g);
  const auto want = ref::cycles(ref::Graph(g));
  REQUIRE(h.edge_count() == want.size());
  std::vector<std::uint64_t> degree(g.vertex_count(), 0);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto t = h.edge(e);
    CHECK(std::vector<Vertex>(t.begin(), t.end()) == want[e]);
    CHECK(h.find(t) == e);
    std::vector<Vertex> shuffled{t[2], t[0], t[1]};
    CHECK(h.find_set(shuffled) == e);
    for (Vertex v : t) ++degree[v];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = h.incident(v);
    CHECK(inc.size() == degree[v]);
    CHECK(inc.size() == cycles_through_vertex(g, v));
    for (EdgeId e : inc) {
      const auto t = h.edge(e);
      CHECK(std::find(t.begin(), t.end(), v) != t.end());
    }
  }
  const std::vector<Vertex> missing{0, 0, 0};
  CHECK_FALSE(h.find(missing).has_value());
  CHECK_THROWS_AS(TightHypergraph::build(complete_layered(3, 4), 63), ResourceLimitError);
  CHECK_NOTHROW(TightHypergraph::build(complete_layered(3, 4), 64));
}

TEST_CASE("tight path validation reports the first defect") {
  // Complete 3-partite layered graph on parts {0,1},{2,3},{4,5}.
  const auto g = complete_layered(3, 2);
  const auto h = build_hypergraph(g);
  const std::vector<Vertex> good{0, 2, 4, 1, 3, 5};
  CHECK(validate_tight_path(h, good).ok);
  CHECK(validate_tight_path(h, std::vector<Vertex>{0, 2}).defect == PathDefect::too_short);
  CHECK(validate_tight_path(h, std::vector<Vertex>{0, 2, 4, 0}).defect == PathDefect::repeated_vertex);
  const auto bad = validate_tight_path(h, std::vector<Vertex>{0, 2, 4, 1, 5});
  CHECK(bad.defect == PathDefect::not_a_hyperedge);
  CHECK(bad.position == 2);
  CHECK(validate_tight_path(h, std::vector<Vertex>{0, 2, 40}).defect == PathDefect::unknown_vertex);

  Coloring col{2, std::vector<std::uint8_t>(h.edge_count(), 0)};
  const std::vector<Vertex> w{2, 4, 1};
  col.colors[*h.find_set(w)] = 1;
  const auto colored = validate_tight_path(h, good, ColorFilter{&col, 0});
  CHECK(colored.defect == PathDefect::wrong_color);
  CHECK(colored.position == 1);
  std::vector<bool> deleted(h.edge_count(), false);
  deleted[*h.find_set(std::vector<Vertex>{0, 2, 4})] = true;
  CHECK(validate_tight_path(h, good, std::nullopt, &deleted).defect == PathDefect::deleted_edge);
}

TEST_CASE("counts agree with and without bitsets") {
  const auto a = generate_random({5, 9, 0.5, 2});
  const auto b = generate_random({5, 9, 0.5, 2}, GraphOptions{.bitset_threshold = 0});
  CHECK(count_proper_cycles(a) == count_proper_cycles(b));
  const std::vector<Vertex> c{1, 10, 30};
  CHECK(count_intersecting(a, c) == count_intersecting(b, c));
}
