#pragma once

#include <span>
#include <vector>

#include "diskspan/geom.hpp"

namespace diskspan {

struct ClosestPair {
  Index a = kNoIndex;
  Index b = kNoIndex;
  double distance = 0.0;

  friend bool operator==(const ClosestPair&, const ClosestPair&) = default;
};

/// Static 2-d tree over a subset of points answering exact nearest-neighbor
/// queries. Ties in distance go to the smaller point index.
class KdTree {
 public:
  KdTree(std::span<const Point> points, std::span<const Index> subset);

  struct Hit {
    Index index = kNoIndex;
    double squared_distance = 0.0;
  };
  Hit nearest(const Point& q) const;

 private:
  struct Node {
    Index begin, end;      // into items_
    Index left, right;     // child nodes or kNoIndex
    double minx, miny, maxx, maxy;
  };

  Index build(Index begin, Index end);
  void search(Index node, const Point& q, Hit& best) const;

  std::span<const Point> points_;
  std::vector<Index> items_;
  std::vector<Node> nodes_;
};

/// Closest pair (a in A, b in B); ties by lexicographic (a, b). Queries go
/// from the smaller side into a KdTree over the larger. Throws EmptySet.
ClosestPair bichromatic_closest_pair(std::span<const Point> points, std::span<const Index> A,
                                     std::span<const Index> B);

}  // namespace diskspan
