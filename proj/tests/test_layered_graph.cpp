#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ramsey_lab/error.hpp"
#include "ramsey_lab/layered_graph.hpp"
#include "ramsey_lab/rng.hpp"

using namespace ramsey_lab;

TEST_CASE("paper parameters for k=3 r=2 n=30") {
  const auto pp = paper_params(3, 2, 30);
  CHECK(pp.c == 288);
  CHECK(pp.part_size == 8640);
  CHECK(pp.p == doctest::Approx(std::sqrt(std::log(30.0) / 30.0)).epsilon(1e-15));
  CHECK_THROWS_AS(paper_params(2, 2, 30), DomainError);
  CHECK_THROWS_AS(paper_params(3, 1, 30), DomainError);
  CHECK_THROWS_AS(paper_params(3, 2, 2), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(generate_random({2, 4, 0.5, 1}), DomainError);
  CHECK_THROWS_AS(generate_random({3, 0, 0.5, 1}), DomainError);
  CHECK_THROWS_AS(generate_random({3, 4, 1.5, 1}), DomainError);
  CHECK_THROWS_AS(generate_random({3, 4, -0.1, 1}), DomainError);
  CHECK_THROWS_AS(generate_random({3, 4, std::nan(""), 1}), DomainError);
}

TEST_CASE("edges only between consecutive parts, both orientations accepted") {
  const std::vector<Edge> bad{{0, 1}};  // both in part 0
  CHECK_THROWS_AS(LayeredGraph(3, 2, bad), DomainError);
  const std::vector<Edge> skip{{0, 4}};  // part 0 to part 2 is the wrap edge for k=3
  CHECK_NOTHROW(LayeredGraph(3, 2, skip));
  const std::vector<Edge> skip4{{0, 4}};  // part 0 to part 2 for k=4 is not consecutive
  CHECK_THROWS_AS(LayeredGraph(4, 2, skip4), DomainError);
  const std::vector<Edge> range{{0, 99}};
  CHECK_THROWS_AS(LayeredGraph(3, 2, range), DomainError);
  const std::vector<Edge> dup{{0, 2}, {2, 0}};
  CHECK_THROWS_AS(LayeredGraph(3, 2, dup), DomainError);
  const std::vector<Edge> rev{{2, 0}};
  LayeredGraph g(3, 2, rev);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK(g.neighbors(0, Direction::forward).size() == 1);
  CHECK(g.neighbors(2, Direction::backward).size() == 1);
}

TEST_CASE("random graph follows the per-pair draw rule") {
  const GraphParams params{4, 5, 0.37, 99};
  const auto g = generate_random(params);
  std::uint64_t expected = 0;
  for (int i = 0; i < 4; ++i)
    for (std::uint32_t a = 0; a < 5; ++a)
      for (std::uint32_t b = 0; b < 5; ++b) {
        const std::uint64_t index = (static_cast<std::uint64_t>(i) * 5 + a) * 5 + b;
        const bool want = to_unit(stream_at(99, index)) < 0.37;
        expected += want;
        CHECK(g.adjacent(i * 5 + a, ((i + 1) % 4) * 5 + b) == want);
      }
  CHECK(g.edge_count() == expected);
  CHECK(g == generate_random(params));
  CHECK_FALSE(g == generate_random({4, 5, 0.37, 100}));
}

TEST_CASE("p = 0 and p = 1 extremes") {
  CHECK(generate_random({3, 6, 0.0, 5}).edge_count() == 0);
  const auto full = generate_random({5, 3, 1.0, 5});
  CHECK(full.edge_count() == 5 * 9);
  CHECK(full == complete_layered(5, 3));
}

TEST_CASE("bitset and list adjacency agree") {
  const auto a = generate_random({3, 70, 0.3, 4});
  const auto b = generate_random({3, 70, 0.3, 4}, GraphOptions{.bitset_threshold = 0});
  CHECK(a.has_bitsets());
  CHECK_FALSE(b.has_bitsets());
  CHECK(a.edges() == b.edges());
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    auto n = a.neighbors(v, Direction::forward);
    CHECK(std::is_sorted(n.begin(), n.end()));
    const auto bits = a.neighbor_bits(v, Direction::forward);
    std::size_t pop = 0;
    for (auto w : bits) pop += static_cast<std::size_t>(__builtin_popcountll(w));
    CHECK(pop == n.size());
  }
  CHECK_THROWS_AS(a.neighbors(9999, Direction::forward), DomainError);
}

TEST_CASE("with_edge adds one edge and rejects duplicates") {
  const auto g = generate_random({3, 4, 0.0, 1});
  const auto h = with_edge(g, {0, 4});
  CHECK(h.edge_count() == 1);
  CHECK_THROWS_AS(with_edge(h, {4, 0}), DomainError);
}
