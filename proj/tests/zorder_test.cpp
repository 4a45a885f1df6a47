#include <gtest/gtest.h>

#include <random>

#include "diskspan/zorder.hpp"
#include "support.hpp"

namespace diskspan {
namespace {

MortonKey shuffle_oracle(std::uint32_t x, std::uint32_t y) {
  MortonKey k = 0;
  for (int i = 0; i < 32; ++i) {
    k |= MortonKey((x >> i) & 1u) << (2 * i + 1);
    k |= MortonKey((y >> i) & 1u) << (2 * i);
  }
  return k;
}

int agree_oracle(MortonKey a, MortonKey b, int level_base, int bits) {
  int shared = 0;
  for (int i = bits - 1; i >= 0; --i) {
    if (((a >> (2 * i)) & 3u) != ((b >> (2 * i)) & 3u)) break;
    ++shared;
  }
  return shared - level_base;
}

TEST(Shuffle, Examples) {
  EXPECT_EQ(shuffle(1, 0), 2u);
  EXPECT_EQ(shuffle(1, 1), 3u);
  EXPECT_EQ(shuffle(2, 1), 9u);
}

TEST(Shuffle, MatchesBitLoop) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> u(0, (1u << kMortonBits) - 1);
  for (int i = 0; i < 5000; ++i) {
    const auto x = u(rng);
    const auto y = u(rng);
    ASSERT_EQ(shuffle(x, y), shuffle_oracle(x, y));
  }
}

TEST(Agree, Examples) {
  EXPECT_EQ(agree(shuffle(0b10, 0), shuffle(0b11, 0), 0, 2), 1);
  EXPECT_EQ(agree(shuffle(0b00, 0), shuffle(0b10, 0), 0, 2), 0);
  EXPECT_EQ(agree(shuffle(0b00, 0), shuffle(0b10, 0), 1, 2), -1);
  EXPECT_THROW(agree(5, 5, 0), Error);
}

TEST(Agree, MatchesPairScanAndIsSymmetric) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint32_t> u(0, (1u << kMortonBits) - 1);
  for (int i = 0; i < 5000; ++i) {
    const MortonKey a = shuffle(u(rng), u(rng));
    // Share a random prefix so deep agreements are exercised.
    const int keep = static_cast<int>(rng() % 62);
    const MortonKey mask = keep == 0 ? 0 : (~MortonKey(0) << (62 - keep)) & ((MortonKey(1) << 62) - 1);
    const MortonKey b = (a & mask) | (shuffle(u(rng), u(rng)) & ~mask);
    if (a == b) continue;
    const int base = static_cast<int>(rng() % 5);
    ASSERT_EQ(agree(a, b, base), agree_oracle(a, b, base, kMortonBits));
    ASSERT_EQ(agree(a, b, base), agree(b, a, base));
  }
}

TEST(RoundToGrid, Examples) {
  EXPECT_EQ(round_to_grid(0.8, 1), 0.5);
  EXPECT_EQ(round_to_grid(0.3, 0), 0.0);
  EXPECT_EQ(round_to_grid(0.625, 3), 0.625);
}

TEST(MortonSort, Example) {
  const Instance inst = testing::make_instance({{0.1, 0.1}, {0.9, 0.9}, {0.1, 0.9}});
  EXPECT_EQ(morton_sort(inst), (std::vector<Index>{0, 2, 1}));
}

TEST(MortonSort, SinglePoint) {
  EXPECT_EQ(morton_sort(testing::make_instance({{3, 4}})), (std::vector<Index>{0}));
}

TEST(MortonSort, SortedPermutationAndIdempotent) {
  const Instance inst = testing::unit_instance(400, 9);
  const MortonFrame frame = MortonFrame::for_instance(inst);
  const auto order = morton_sort(inst, frame);
  std::vector<bool> seen(inst.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    ASSERT_FALSE(seen[order[i]]);
    seen[order[i]] = true;
    if (i > 0) EXPECT_LT(frame.key(inst.points[order[i - 1]]), frame.key(inst.points[order[i]]));
  }
  Instance sorted;
  for (Index i : order) {
    sorted.points.push_back(inst.points[i]);
    sorted.radii.push_back(1.0);
  }
  const auto again = morton_sort(sorted, frame);
  for (Index i = 0; i < again.size(); ++i) EXPECT_EQ(again[i], i);
  EXPECT_EQ(morton_sort(inst, frame), order);
}

TEST(MortonSort, DetectsQuantizationCollision) {
  const Instance inst = testing::make_instance({{0.5, 0.5}, {0.5 + 1e-12, 0.5}});
  EXPECT_THROW(morton_sort(inst), Error);
}

TEST(MortonFrame, AlignsEpsilonGrid) {
  // Cells of the eps-grid at depth d are quadtree squares of level
  // scale_log + log2(1/eps) + d: two points share one iff d <= agree.
  const Instance inst = testing::random_instance(400, 2.0, 1.0, 4);
  const MortonFrame frame = MortonFrame::for_instance(inst);
  const Epsilon eps(4);
  const auto order = morton_sort(inst, frame);
  int deep = 0;
  for (Index i = 0; i + 1 < order.size(); ++i) {
    const Point& p = inst.points[order[i]];
    const Point& q = inst.points[order[i + 1]];
    const int d = agree(frame.key(p), frame.key(q), frame.level_of(eps.log_inv()));
    if (d >= 1) ++deep;
    for (int depth = 0; depth < 8; ++depth) {
      const double side = eps.value() * std::ldexp(1.0, -depth);
      const bool same = std::floor(p.x / side) == std::floor(q.x / side) &&
                        std::floor(p.y / side) == std::floor(q.y / side);
      EXPECT_EQ(same, depth <= d) << i << ' ' << depth;
    }
  }
  EXPECT_GT(deep, 10);
}

}  // namespace
}  // namespace diskspan
