#include <gtest/gtest.h>

#include <random>

#include "diskspan/oracle.hpp"
#include "support.hpp"

namespace diskspan {
namespace {

SpannerGraph graph(Index n, std::vector<Edge> edges) {
  SpannerGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.canonicalize();
  return g;
}

TEST(Oracle, IntersectionGraphSmall) {
  EXPECT_EQ(build_intersection_graph(testing::make_instance({{0, 0}, {2, 0}})).size(), 1u);
  EXPECT_EQ(build_intersection_graph(testing::make_instance({{0, 0}, {5, 0}, {10, 0}})).size(), 0u);
  EXPECT_THROW(build_intersection_graph(testing::unit_instance(30, 1), OracleConfig{10}), Error);
}

TEST(Oracle, LatticeHasTwelveNeighbors) {
  Instance inst;
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y) inst.points.push_back({double(x), double(y)}), inst.radii.push_back(1.0);
  const auto g = build_intersection_graph(inst);
  const Adjacency adj(g.n, g.edges);
  for (int x = 2; x < 8; ++x)
    for (int y = 2; y < 8; ++y) EXPECT_EQ(adj.degree(static_cast<Index>(10 * x + y)), 12u);
}

TEST(Oracle, ShortestPathExamples) {
  const auto tri = graph(3, {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}, {0, 2, 3.0, 0}});
  EXPECT_EQ(shortest_paths(tri)[0][2], 2.0);
  const auto pair = graph(2, {});
  EXPECT_EQ(shortest_paths(pair)[0][1], kInfinity);
  EXPECT_EQ(bellman_ford(tri, 0)[2], 2.0);
}

TEST(Oracle, RandomMatrixIsAMetric) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> w(0.5, 2.0);
  std::uniform_int_distribution<Index> v(0, 29);
  std::vector<Edge> es;
  for (int i = 0; i < 80; ++i) {
    const Index a = v(rng), b = v(rng);
    if (a != b) es.push_back({std::min(a, b), std::max(a, b), w(rng), 0});
  }
  const auto g = graph(30, es);
  const auto d = shortest_paths(g);
  for (Index a = 0; a < 30; ++a) {
    EXPECT_EQ(d[a][a], 0.0);
    for (Index b = 0; b < 30; ++b) {
      EXPECT_NEAR(d[a][b], d[b][a], 1e-12);
      for (Index c = 0; c < 30; ++c) EXPECT_LE(d[a][c], d[a][b] + d[b][c] + 1e-12);
    }
  }
}

TEST(Oracle, StretchExamples) {
  const auto tri = graph(3, {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}, {0, 2, 1.0, 0}});
  EXPECT_EQ(verify_stretch(tri, tri, 1.0).max_ratio, 1.0);
  const auto path = graph(3, {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}});
  const auto r = verify_stretch(tri, path, 1.5);
  EXPECT_EQ(r.max_ratio, 2.0);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.u, 0u);
  EXPECT_EQ(r.v, 2u);
  EXPECT_THROW(verify_stretch(path, tri, 2.0), Error);
}

TEST(Oracle, NaiveQuadtreeSmall) {
  const auto one = naive_quadtree(testing::make_instance({{0.1, 0.1}}), Epsilon(4));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.node(0).is_leaf());

  const Instance four = testing::make_instance({{0.05, 0.05}, {0.2, 0.05}, {0.05, 0.2}, {0.2, 0.2}});
  const auto f = naive_quadtree(four, Epsilon(4));
  ASSERT_EQ(f.roots().size(), 1u);
  const auto& root = f.node(f.roots()[0]);
  ASSERT_EQ(root.children.size(), 4u);
  for (Index c : root.children) {
    EXPECT_TRUE(f.node(c).is_leaf());
    EXPECT_EQ(f.node(c).depth, root.depth + 1);
  }
  EXPECT_EQ(canonical_form(f), canonical_form(build_compressed_forest(four, Epsilon(4))));
}

TEST(Oracle, BruteBcpSingletons) {
  const std::vector<Point> pts{{0, 0}, {3, 4}};
  const std::vector<Index> a{0}, b{1};
  const auto cp = brute_bcp(pts, a, b);
  EXPECT_EQ(cp.a, 0u);
  EXPECT_EQ(cp.b, 1u);
  EXPECT_EQ(cp.distance, 5.0);
}

TEST(Oracle, StretchConstants) {
  EXPECT_DOUBLE_EQ(StretchConstants::udg_bound(Epsilon(2)), 3.0);
  EXPECT_DOUBLE_EQ(StretchConstants::udg_bound(Epsilon(4)), 3.0);
  EXPECT_GT(StretchConstants::udg_bound(Epsilon(8)), 3.0);
  EXPECT_LT(StretchConstants::udg_bound(Epsilon(16)), StretchConstants::udg_bound(Epsilon(8)));
  EXPECT_DOUBLE_EQ(StretchConstants::yao_bound(Epsilon(8)), 1.125);
  EXPECT_GT(StretchConstants::dg_bound(Epsilon(8)), StretchConstants::udg_bound(Epsilon(8)));
}

}  // namespace
}  // namespace diskspan
