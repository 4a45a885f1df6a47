#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "diskspan/oracle.hpp"
#include "diskspan/quadforest.hpp"
#include "support.hpp"

namespace diskspan {
namespace {

TEST(Forest, SinglePoint) {
  const Instance inst = testing::make_instance({{0.3, 0.3}});
  const auto f = build_compressed_forest(inst, Epsilon(2));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(f.node(0).is_root());
  EXPECT_TRUE(f.node(0).is_leaf());
  const Square sq = f.square(0);
  EXPECT_EQ(sq.lower_left(), (Point{0.0, 0.0}));
  EXPECT_EQ(sq.side, 0.5);
}

TEST(Forest, SeparateCellsGiveSeparateRoots) {
  const Instance inst = testing::make_instance({{0.1, 0.1}, {3.0, 3.0}});
  const auto f = build_compressed_forest(inst, Epsilon(4));
  EXPECT_EQ(f.roots().size(), 2u);
  for (Index r : f.roots()) EXPECT_TRUE(f.node(r).is_leaf());
}

TEST(Forest, FourQuadrantsOfOneCell) {
  const Instance inst = testing::make_instance({{0.1, 0.1}, {0.4, 0.1}, {0.1, 0.4}, {0.4, 0.4}});
  const auto f = build_compressed_forest(inst, Epsilon(2));
  ASSERT_EQ(f.roots().size(), 1u);
  const auto& root = f.node(f.roots()[0]);
  EXPECT_EQ(root.depth, 0);
  ASSERT_EQ(root.children.size(), 4u);
  for (Index c : root.children) {
    EXPECT_EQ(f.node(c).depth, 1);
    EXPECT_TRUE(f.node(c).is_leaf());
    EXPECT_EQ(f.square(c).side, 0.25);
  }
}

TEST(Forest, DeepLeafSide) {
  // Two points that first separate at depth 3 of the eps = 1/2 grid.
  const Instance inst = testing::make_instance({{0.01, 0.01}, {0.07, 0.01}});
  const auto f = build_compressed_forest(inst, Epsilon(2));
  ASSERT_EQ(f.size(), 3u);
  for (Index c : f.node(0).children) {
    EXPECT_EQ(f.node(c).depth, 3);
    EXPECT_EQ(f.square(c).side, 1.0 / 16);
  }
}

class RandomForest : public ::testing::TestWithParam<int> {};

TEST_P(RandomForest, MatchesNaiveQuadtree) {
  const int seed = GetParam();
  const Instance inst = testing::random_instance(256, 3.0, 1.0, seed);
  const Epsilon eps(4);
  const auto fast = build_compressed_forest(inst, eps);
  const auto naive = naive_quadtree(inst, eps);
  EXPECT_EQ(canonical_form(fast), canonical_form(naive));
}

TEST_P(RandomForest, StructuralInvariants) {
  const int seed = GetParam();
  const Instance inst = testing::random_instance(300, 4.0, 1.0, seed);
  const auto f = build_compressed_forest(inst, Epsilon(8));
  EXPECT_LE(f.size(), 2 * inst.size());

  std::vector<int> leaf_hits(inst.size(), 0);
  Index covered = 0;
  for (Index r : f.roots()) {
    EXPECT_EQ(f.node(r).lo, covered);
    covered = f.node(r).hi;
  }
  EXPECT_EQ(covered, inst.size());
  for (const auto& n : f.nodes()) {
    const Square sq = f.square(n.id);
    for (Index p : f.points(n.id)) EXPECT_TRUE(square_contains(sq, inst.points[p])) << n.id;
    const auto pts = f.points(n.id);
    EXPECT_NE(std::find(pts.begin(), pts.end(), n.rep), pts.end());
    if (n.is_leaf()) {
      EXPECT_EQ(n.size(), 1u);
      ++leaf_hits[f.order()[n.lo]];
      continue;
    }
    EXPECT_GE(n.children.size(), 2u);
    EXPECT_EQ(n.rep, f.node(n.children.front()).rep);
    Index at = n.lo;
    for (Index c : n.children) {
      const auto& cn = f.node(c);
      EXPECT_EQ(cn.parent, n.id);
      EXPECT_GT(cn.depth, n.depth);
      EXPECT_EQ(cn.depth, f.node(n.children.front()).depth);
      EXPECT_EQ(cn.lo, at);
      at = cn.hi;
    }
    EXPECT_EQ(at, n.hi);
  }
  for (int h : leaf_hits) EXPECT_EQ(h, 1);
}

TEST_P(RandomForest, ByRadiusRepresentatives) {
  const int seed = GetParam();
  const Instance inst = testing::random_instance(200, 3.0, 1.0 / 64, seed);
  const auto f = build_compressed_forest(inst, Epsilon(4), RepMode::ByRadius);
  for (const auto& n : f.nodes()) {
    const auto pts = f.points(n.id);
    Index best = pts.front();
    for (Index p : pts) {
      if (inst.radii[p] > inst.radii[best] || (inst.radii[p] == inst.radii[best] && p < best)) best = p;
    }
    EXPECT_EQ(n.rep, best);
  }
}

TEST_P(RandomForest, DiskRootsAreMaskedCorrectly) {
  const int seed = GetParam();
  const Instance inst = testing::random_instance(300, 3.0, 1.0 / 256, seed);
  const Epsilon eps(4);
  const auto f = build_compressed_forest(inst, eps, RepMode::ByRadius);
  const DiskForest df = split_roots_by_radius(f);
  for (Index ri = 0; ri < df.roots.size(); ++ri) {
    const DiskRoot& r = df.roots[ri];
    const Point& rep = inst.points[f.node(r.node).rep];
    // Masked C(t) at the root depth is non-empty.
    bool nonempty = false;
    for (Index p = 0; p < inst.size(); ++p) {
      if (grid_cell(inst.points[p], eps, r.depth) == grid_cell(rep, eps, r.depth) && disk_level(inst.radii[p]) <= r.depth)
        nonempty = true;
    }
    EXPECT_TRUE(nonempty);
    if (r.depth == 0) continue;
    // The square one level up holds no disk of level <= its depth.
    for (Index p = 0; p < inst.size(); ++p) {
      if (grid_cell(inst.points[p], eps, r.depth - 1) == grid_cell(rep, eps, r.depth - 1))
        EXPECT_GT(disk_level(inst.radii[p]), r.depth - 1) << "root " << ri << " point " << p;
    }
  }
  for (Index p = 0; p < inst.size(); ++p) {
    ASSERT_NE(df.owner[p], kNoIndex);
    const int level = disk_level(inst.radii[p]);
    const DiskRoot& own = df.roots[df.owner[p]];
    EXPECT_LE(own.depth, level);
    // No other root lies between the owner and the square introducing p.
    for (const DiskRoot& r : df.roots) {
      if (r.depth <= own.depth || r.depth > level) continue;
      const auto pts = f.points(r.node);
      EXPECT_EQ(std::find(pts.begin(), pts.end(), p), pts.end()) << "point " << p;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomForest, ::testing::Range(1, 9));

TEST(DiskForest, UnitRadiiGiveNoCuts) {
  const Instance inst = testing::random_instance(200, 3.0, 1.0, 3);
  const auto f = build_compressed_forest(inst, Epsilon(4), RepMode::ByRadius);
  const DiskForest df = split_roots_by_radius(f);
  ASSERT_EQ(df.roots.size(), f.roots().size());
  for (std::size_t i = 0; i < df.roots.size(); ++i) {
    EXPECT_EQ(df.roots[i].node, f.roots()[i]);
    EXPECT_EQ(df.roots[i].depth, 0);
  }
}

TEST(DiskForest, LoneSmallDiskRootsAtItsLevel) {
  Instance inst{{{0.1, 0.1}, {0.2, 0.1}, {0.9, 0.9}}, {1.0, 1.0, std::ldexp(1.5, -5)}};
  const auto f = build_compressed_forest(inst, Epsilon(2), RepMode::ByRadius);
  const DiskForest df = split_roots_by_radius(f);
  EXPECT_EQ(df.roots[df.owner[2]].depth, 5);
  EXPECT_EQ(df.roots[df.owner[0]].depth, 0);
}

TEST(Forest, DumpFormat) {
  const Instance inst = testing::make_instance({{0.1, 0.1}, {0.4, 0.1}});
  const auto f = build_compressed_forest(inst, Epsilon(2));
  std::ostringstream os;
  write_forest_dump(os, f);
  EXPECT_EQ(os.str(), "0 0 0 0 0.5 0 0 2 -1\n1 1 0 0 0.25 0 0 1 0\n2 1 0.25 0 0.25 1 1 2 0\n");
}

}  // namespace
}  // namespace diskspan
