#include <gtest/gtest.h>

#include "hyperwiener/generators.hpp"
#include "hyperwiener/metric.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace hyperwiener;

TEST(Bfs, SingleEdge) {
  const auto row = bfs_from(single_edge(4), 0);
  EXPECT_EQ(row.dist, (std::vector<Distance>{0, 1, 1, 1}));
}

TEST(Bfs, PhenyleneEnds) {
  // First and last vertex of the chain.
  EXPECT_EQ(bfs_from(phenylene(2), 0)[11], 3u);
}

TEST(Bfs, CubeCorner) {
  const auto c = cube(3, 2);
  const std::size_t from[] = {0, 0};
  const std::size_t to[] = {1, 1};
  EXPECT_EQ(bfs_from(c.graph, c.coordinates.id_of(from))[c.coordinates.id_of(to)], 2u);
}

TEST(Bfs, MatchesFloydWarshall) {
  for (const auto& inst : instances::zoo()) {
    const auto d = oracle::floyd_warshall(inst.graph);
    const auto table = DistanceTable::compute(inst.graph, 3);
    for (VertexId u = 0; u < inst.graph.vertex_count(); ++u) {
      for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) ASSERT_EQ(table(u, v), d[u][v]) << inst.name;
    }
  }
}

TEST(Distance, Basics) {
  const auto h = example_t1();
  EXPECT_EQ(distance(h, 4, 4), 0u);
  EXPECT_EQ(distance(h, 4, 5), 1u);
  const auto split = Hypergraph::build(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(distance(split, 0, 3), kUnreachable);
  EXPECT_EQ(distance(split, 0, 1), 1u);
}

TEST(Distance, MetricProperties) {
  for (const auto& inst : instances::zoo()) {
    const auto& h = inst.graph;
    const auto t = DistanceTable::compute(h);
    const auto n = static_cast<VertexId>(h.vertex_count());
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        ASSERT_EQ(t(u, v), t(v, u));
        for (VertexId w = 0; w < n; ++w) ASSERT_LE(t(u, w), t(u, v) + t(v, w)) << inst.name;
      }
    }
    for (const auto& e : h.edges()) {
      for (VertexId a : e) {
        for (VertexId b : e) {
          if (a != b) {
            ASSERT_EQ(t(a, b), 1u);
          }
        }
      }
    }
  }
}

TEST(Distance, HammingInCubes) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto c = cube(k, n);
      const auto t = DistanceTable::compute(c.graph);
      for (VertexId u = 0; u < c.graph.vertex_count(); ++u) {
        for (VertexId v = 0; v < c.graph.vertex_count(); ++v) {
          ASSERT_EQ(t(u, v), oracle::hamming(c.coordinates.tuple_of(u), c.coordinates.tuple_of(v)));
        }
      }
    }
  }
}

TEST(WienerBrute, Examples) {
  EXPECT_EQ(wiener_brute(example_t1()), 37);
  EXPECT_EQ(wiener_brute(single_edge(5)), 10);
  EXPECT_EQ(wiener_brute(phenylene(2)), 114);
  EXPECT_EQ(wiener_brute(Hypergraph::build(1, {})), 0);
}

TEST(WienerBrute, RejectsDisconnected) {
  const auto split = Hypergraph::build(4, {{0, 1}, {2, 3}});
  try {
    wiener_brute(split);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
  EXPECT_THROW(wiener_brute(split, 4), Error);
}

TEST(WienerBrute, CubeFormulaAndThreads) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto h = cube(k, n).graph;
      EXPECT_EQ(wiener_brute(h), oracle::cube_wiener(k, n));
      EXPECT_EQ(wiener_brute(h, 4), oracle::cube_wiener(k, n));
    }
  }
}

TEST(WienerBrute, MatchesFloydWarshall) {
  for (const auto& inst : instances::zoo()) {
    EXPECT_EQ(wiener_brute(inst.graph), oracle::wiener(oracle::floyd_warshall(inst.graph))) << inst.name;
  }
}

TEST(Convexity, Examples) {
  const auto c = cube(3, 2);
  std::vector<VertexId> all(c.graph.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  EXPECT_TRUE(is_convex(c.graph, all));

  const std::size_t a[] = {0, 0};
  const std::size_t b[] = {1, 1};
  const std::vector<VertexId> pair{c.coordinates.id_of(a), c.coordinates.id_of(b)};
  EXPECT_FALSE(is_convex(c.graph, pair));

  // Blocks obtained by fixing the first coordinate.
  for (std::size_t x = 0; x < 3; ++x) {
    std::vector<VertexId> block;
    for (std::size_t y = 0; y < 3; ++y) {
      const std::size_t t[] = {x, y};
      block.push_back(c.coordinates.id_of(t));
    }
    EXPECT_TRUE(is_convex(c.graph, block));
  }

  EXPECT_THROW(is_convex(Hypergraph::build(3, {{0, 1}}), std::vector<VertexId>{0}), Error);
}

TEST(Convexity, MatchesOracleOnSmallSets) {
  for (const auto& inst : instances::zoo()) {
    const auto& h = inst.graph;
    if (h.vertex_count() > 16) continue;
    const auto d = oracle::floyd_warshall(h);
    const auto t = DistanceTable::compute(h);
    // Every closed ball of radius 1 plus every pair.
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
      std::vector<VertexId> ball;
      for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (d[u][v] <= 1) ball.push_back(v);
      }
      EXPECT_EQ(is_convex(t, ball), oracle::convex(d, ball)) << inst.name;
      for (VertexId v = u + 1; v < h.vertex_count(); ++v) {
        const std::vector<VertexId> pair{u, v};
        EXPECT_EQ(is_convex(t, pair), oracle::convex(d, pair)) << inst.name;
      }
    }
  }
}

TEST(CloserSet, Examples) {
  EXPECT_EQ(closer_set(single_edge(3), 0, 1), (std::vector<VertexId>{0}));
  const auto h = example_t1();
  const auto s = closer_set(h, 2, 6);
  EXPECT_NE(std::ranges::find(s, 2u), s.end());

  const auto c = cube(3, 2);
  const std::size_t x[] = {0, 0};
  const std::size_t y[] = {1, 0};
  const auto got = closer_set(c.graph, c.coordinates.id_of(x), c.coordinates.id_of(y));
  std::vector<VertexId> expected;
  for (VertexId v = 0; v < c.graph.vertex_count(); ++v) {
    if (c.coordinates.tuple_of(v)[0] == 0) expected.push_back(v);
  }
  EXPECT_EQ(got, expected);
}

TEST(Isometry, Examples) {
  const auto lp = phenylene(2);
  std::vector<VertexId> identity(lp.vertex_count());
  for (VertexId v = 0; v < identity.size(); ++v) identity[v] = v;
  EXPECT_TRUE(is_isometric_subhypergraph(lp, lp, identity));

  // One hexagon edge of LP_2, placed at its vertices.
  const auto hexagon = single_edge(6);
  const std::vector<VertexId> to_second{6, 7, 8, 9, 10, 11};
  EXPECT_TRUE(is_isometric_subhypergraph(lp, hexagon, to_second));

  // Two antipodal vertices of C6 without edges: distance 3 vs unreachable.
  const auto c6 = instances::cycle_graph(6);
  const std::vector<VertexId> antipodes{0, 3};
  EXPECT_FALSE(is_isometric_subhypergraph(c6, Hypergraph::build(2, {}), antipodes));

  // A path of C6 that is not geodesic in the host.
  const auto path = Hypergraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const std::vector<VertexId> around{0, 1, 2, 3, 4};
  EXPECT_FALSE(is_isometric_subhypergraph(c6, path, around));
}

TEST(Isometry, RejectsNonSubhypergraphs) {
  const auto c6 = instances::cycle_graph(6);
  const auto chord = Hypergraph::build(2, {{0, 1}});
  EXPECT_THROW(is_isometric_subhypergraph(c6, chord, std::vector<VertexId>{0, 3}), Error);
  EXPECT_THROW(is_isometric_subhypergraph(c6, chord, std::vector<VertexId>{1, 1}), Error);
  EXPECT_THROW(is_isometric_subhypergraph(c6, chord, std::vector<VertexId>{1}), Error);
}
