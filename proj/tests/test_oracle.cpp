#include <functional>

#include "doctest.h"
#include "ramsey_lab/coloring.hpp"
#include "ramsey_lab/error.hpp"
#include "ramsey_lab/oracle.hpp"
#include "support.hpp"

using namespace ramsey_lab;

namespace {

// Tries every sequence of n distinct vertices.
bool ref_path_exists(const ref::Graph& rg, const TightHypergraph& h, const Coloring& col, int color,
                     std::size_t n) {
  const auto total = static_cast<Vertex>(rg.k * rg.m);
  std::vector<Vertex> seq;
  std::vector<bool> used(total, false);
  std::function<bool()> go = [&]() -> bool {
    if (seq.size() == n) return ref::is_tight_path(rg, h, col, color, seq);
    for (Vertex v = 0; v < total; ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      // Prune on the newest window only.
      const bool window_ok = seq.size() < static_cast<std::size_t>(rg.k) ||
                             ref::is_tight_path(rg, h, col, color,
                                                std::vector<Vertex>(seq.end() - rg.k, seq.end()));
      if (window_ok && go()) return true;
      seq.pop_back();
      used[v] = false;
    }
    return false;
  };
  return go();
}

}  // namespace

TEST_CASE("path search agrees with exhaustive sequences") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = generate_random({3, 3, 0.7, seed});
    const ref::Graph rg(g);
    const auto h = build_hypergraph(g);
    const auto col = random_coloring(h, 2, seed);
    for (int color : {0, 1})
      for (std::size_t n : {3u, 4u, 5u, 6u}) {
        const auto res = tight_path_exists(h, col, color, n);
        REQUIRE(res.verdict != Verdict::unknown);
        CHECK((res.verdict == Verdict::yes) == ref_path_exists(rg, h, col, color, n));
        if (res.verdict == Verdict::yes) {
          CHECK(res.witness.size() == n);
          CHECK(ref::is_tight_path(rg, h, col, color, res.witness));
        }
      }
  }
}

TEST_CASE("path search respects the state cap") {
  const auto g = complete_layered(3, 4);
  const auto h = build_hypergraph(g);
  Coloring col{2, std::vector<std::uint8_t>(h.edge_count(), 0)};
  // Alternate colors so that long paths are scarce and the search branches.
  for (std::size_t e = 0; e < col.size(); e += 2) col.colors[e] = 1;
  CHECK(tight_path_exists(h, col, 0, 12, 3).verdict == Verdict::unknown);
}

TEST_CASE("arrow check: cube hypergraph does not arrow P_4 with two colors") {
  // complete_layered(3, 2) is the 8-edge hypergraph whose tight adjacency is
  // the 3-cube; the parity coloring avoids monochromatic tight 4-paths.
  const auto g = complete_layered(3, 2);
  const ref::Graph rg(g);
  const auto h = build_hypergraph(g);
  const auto res = arrow_check(h, 4, 2);
  CHECK(res.verdict == Verdict::no);
  REQUIRE(res.counterexample.has_value());
  for (int color : {0, 1}) CHECK_FALSE(ref_path_exists(rg, h, *res.counterexample, color, 4));
  CHECK(arrow_check(h, 4, 2, 1'000'000, 1'000'000, 3).verdict == Verdict::no);
}

TEST_CASE("arrow check: single edges always arrow") {
  const auto h = build_hypergraph(complete_layered(3, 2));
  const auto res = arrow_check(h, 3, 2);
  CHECK(res.verdict == Verdict::yes);
  CHECK(res.colorings_checked == 128);  // edge 0 fixed, 2^7 for the rest
  CHECK(arrow_check(build_hypergraph(generate_random({3, 3, 0.0, 1})), 3, 2).verdict == Verdict::no);
}

TEST_CASE("monochromatic cube has a Hamiltonian tight path") {
  const auto g = complete_layered(3, 2);
  const auto h = build_hypergraph(g);
  const Coloring mono{2, std::vector<std::uint8_t>(h.edge_count(), 0)};
  CHECK(tight_path_exists(h, mono, 0, 6).verdict == Verdict::yes);
  CHECK(tight_path_exists(h, mono, 1, 3).verdict == Verdict::no);
}

TEST_CASE("arrow check refuses more colorings than the cap") {
  const auto h = build_hypergraph(complete_layered(3, 3));
  CHECK_THROWS_AS(arrow_check(h, 5, 2, 100), ResourceLimitError);
  // 2^8 colorings for the cube; halved by fixing edge 0.
  CHECK_NOTHROW(arrow_check(build_hypergraph(complete_layered(3, 2)), 4, 2, 256));
}
