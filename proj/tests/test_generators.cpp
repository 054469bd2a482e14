#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hyperwiener/generators.hpp"
#include "hyperwiener/wiener_cut.hpp"
#include "support/oracles.hpp"

using namespace hyperwiener;

namespace {

std::set<std::vector<VertexId>> edge_set(const Hypergraph& h) { return {h.edges().begin(), h.edges().end()}; }

}  // namespace

TEST(SingleEdge, Examples) {
  const auto q = single_edge(3);
  EXPECT_EQ(q.vertex_count(), 3u);
  EXPECT_EQ(q.edge_count(), 1u);
  EXPECT_EQ(single_edge(2).edges()[0], (std::vector<VertexId>{0, 1}));
  EXPECT_THROW(single_edge(1), Error);
}

TEST(CartesianProduct, Examples) {
  const auto p = cartesian_product(single_edge(3), single_edge(3));
  EXPECT_EQ(p.vertex_count(), 9u);
  EXPECT_EQ(p.edge_count(), 6u);

  const auto t1 = example_t1();
  const auto point = Hypergraph::build(1, {});
  EXPECT_EQ(cartesian_product(t1, point), t1);
  EXPECT_EQ(cartesian_product(point, t1), t1);
}

TEST(CartesianProduct, SizesMultiply) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> a(1 + trial % 3);
    std::vector<std::size_t> b(1 + trial % 2);
    for (auto& s : a) s = 2 + rng() % 3;
    for (auto& s : b) s = 2 + rng() % 3;
    const auto ha = random_hypertree(a, rng());
    const auto hb = random_hypertree(b, rng());
    const auto p = cartesian_product(ha, hb);
    EXPECT_EQ(p.vertex_count(), ha.vertex_count() * hb.vertex_count());
    EXPECT_EQ(p.edge_count(), ha.vertex_count() * hb.edge_count() + ha.edge_count() * hb.vertex_count());
  }
}

TEST(Cube, Examples) {
  const auto c = cube(3, 2);
  EXPECT_EQ(c.graph.vertex_count(), 9u);
  EXPECT_EQ(c.graph.edge_count(), 6u);

  const auto sq = cube(2, 2).graph;
  EXPECT_EQ(edge_set(sq), (std::set<std::vector<VertexId>>{{0, 2}, {1, 3}, {0, 1}, {2, 3}}));

  for (std::size_t k = 2; k <= 5; ++k) EXPECT_EQ(cube(k, 1).graph, single_edge(k));
  EXPECT_THROW(cube(1, 2), Error);
  EXPECT_THROW(cube(3, 0), Error);
}

TEST(Cube, CountsAndCoordinates) {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto c = cube(k, n);
      EXPECT_EQ(c.graph.vertex_count(), oracle::ipow(k, n));
      EXPECT_EQ(c.graph.edge_count(), n * oracle::ipow(k, n - 1));
      for (VertexId v = 0; v < c.graph.vertex_count(); ++v) ASSERT_EQ(c.coordinates.id_of(c.coordinates.tuple_of(v)), v);
      for (const auto& e : c.graph.edges()) {
        // Members agree on all but one coordinate.
        for (VertexId a : e) {
          for (VertexId b : e) {
            if (a != b) {
              ASSERT_EQ(oracle::hamming(c.coordinates.tuple_of(a), c.coordinates.tuple_of(b)), 1u);
            }
          }
        }
      }
    }
  }
}

TEST(Cube, EqualsIteratedProduct) {
  for (std::size_t k = 2; k <= 4; ++k) {
    auto product = single_edge(k);
    for (std::size_t n = 1; n <= 3; ++n) {
      if (n > 1) product = cartesian_product(product, single_edge(k));
      EXPECT_EQ(edge_set(cube(k, n).graph), edge_set(product)) << k << "," << n;
    }
  }
}

TEST(Phenylene, Examples) {
  const auto lp4 = phenylene(4);
  EXPECT_EQ(lp4.vertex_count(), 24u);
  EXPECT_EQ(lp4.edge_count(), 7u);
  EXPECT_EQ(phenylene(2).edges(),
            (std::vector<std::vector<VertexId>>{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}, {4, 5, 6, 7}}));
  EXPECT_THROW(phenylene(1), Error);
}

TEST(Phenylene, Structure) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto h = phenylene(n);
    EXPECT_FALSE(uniformity(h));
    EXPECT_FALSE(is_linear(h));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto& square = h.edges()[n + i];
      for (std::size_t hex : {i, i + 1}) {
        std::vector<VertexId> common;
        std::ranges::set_intersection(h.edges()[hex], square, std::back_inserter(common));
        EXPECT_EQ(common.size(), 2u);
      }
    }
  }
}

TEST(RandomHypertree, Examples) {
  const std::vector<std::size_t> threes{3, 3, 3};
  for (Seed s = 0; s < 5; ++s) {
    const auto t = random_hypertree(threes, s);
    EXPECT_EQ(t.vertex_count(), 7u);
    EXPECT_TRUE(acyclicity_check(t));
    EXPECT_TRUE(is_linear(t));
  }
  const std::vector<std::size_t> one{4};
  EXPECT_EQ(random_hypertree(one, 17), single_edge(4));
  const std::vector<std::size_t> twos{2, 2, 2, 2};
  const auto tree = random_hypertree(twos, 3);
  EXPECT_EQ(tree.vertex_count(), 5u);
  EXPECT_EQ(uniformity(tree), std::optional<std::size_t>(2));
  const std::vector<std::size_t> bad{3, 1};
  EXPECT_THROW(random_hypertree(bad, 1), Error);
}

TEST(RandomHypertree, DeterministicAndWellFormed) {
  std::mt19937_64 rng(1);
  for (Seed seed = 0; seed < 200; ++seed) {
    std::vector<std::size_t> sizes(1 + rng() % 12);
    for (auto& s : sizes) s = 2 + rng() % 3;
    const auto t = random_hypertree(sizes, seed);
    EXPECT_EQ(t, random_hypertree(sizes, seed));
    EXPECT_TRUE(acyclicity_check(t));
    EXPECT_TRUE(is_linear(t));
    EXPECT_TRUE(is_connected(t));
  }
}

TEST(ExampleT1, Facts) {
  const auto t1 = example_t1();
  EXPECT_EQ(wiener_brute(t1), 37);
  auto sizes = components_without(t1, std::vector<EdgeId>{1}).sizes();
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{2, 1, 4}));
  EXPECT_FALSE(uniformity(t1));
}

TEST(ExampleClar, Facts) {
  const auto ex = example_clar();
  EXPECT_EQ(ex.graph.vertex_count(), 42u);
  EXPECT_EQ(wiener_brute(ex.graph), 2985);
  EXPECT_EQ(oracle::wiener(oracle::floyd_warshall(ex.graph)), 2985u);
  EXPECT_TRUE(validate_cut_partition(ex.graph, ex.cuts).method_valid());
  // Type I: the central sextet plus the three 2-edges disjoint from it.
  EXPECT_EQ(ex.graph.edges()[ex.cuts.cuts[0][0]].size(), 6u);
  for (std::size_t i = 1; i < ex.cuts.cuts[0].size(); ++i) EXPECT_EQ(ex.graph.edges()[ex.cuts.cuts[0][i]].size(), 2u);
}
