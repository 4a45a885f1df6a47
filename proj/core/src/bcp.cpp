#include "diskspan/bcp.hpp"

#include <algorithm>
#include <tuple>

namespace diskspan {

namespace {

constexpr Index kLeafSize = 8;

bool better(double d2, Index idx, const KdTree::Hit& best) {
  return d2 < best.squared_distance || (d2 == best.squared_distance && idx < best.index);
}

}  // namespace

KdTree::KdTree(std::span<const Point> points, std::span<const Index> subset)
    : points_(points), items_(subset.begin(), subset.end()) {
  if (!items_.empty()) {
    nodes_.reserve(2 * items_.size() / kLeafSize + 2);
    build(0, static_cast<Index>(items_.size()));
  }
}

Index KdTree::build(Index begin, Index end) {
  Node node{begin, end, kNoIndex, kNoIndex, kInfinity, kInfinity, -kInfinity, -kInfinity};
  for (Index i = begin; i < end; ++i) {
    const Point& p = points_[items_[i]];
    node.minx = std::min(node.minx, p.x);
    node.miny = std::min(node.miny, p.y);
    node.maxx = std::max(node.maxx, p.x);
    node.maxy = std::max(node.maxy, p.y);
  }
  const auto id = static_cast<Index>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin > kLeafSize) {
    const bool split_x = (node.maxx - node.minx) >= (node.maxy - node.miny);
    const Index mid = begin + (end - begin) / 2;
    std::nth_element(items_.begin() + begin, items_.begin() + mid, items_.begin() + end,
                     [&](Index a, Index b) {
                       const Point& p = points_[a];
                       const Point& q = points_[b];
                       return split_x ? std::tie(p.x, p.y, a) < std::tie(q.x, q.y, b)
                                      : std::tie(p.y, p.x, a) < std::tie(q.y, q.x, b);
                     });
    const Index l = build(begin, mid);
    const Index r = build(mid, end);
    nodes_[id].left = l;
    nodes_[id].right = r;
  }
  return id;
}

void KdTree::search(Index id, const Point& q, Hit& best) const {
  const Node& node = nodes_[id];
  const double dx = std::max({node.minx - q.x, 0.0, q.x - node.maxx});
  const double dy = std::max({node.miny - q.y, 0.0, q.y - node.maxy});
  // The box bound is a lower bound on every member; equal bounds must still
  // be visited so ties resolve to the smallest index.
  if (dx * dx + dy * dy > best.squared_distance) return;
  if (node.left == kNoIndex) {
    for (Index i = node.begin; i < node.end; ++i) {
      const Index idx = items_[i];
      const double d2 = squared_distance(points_[idx], q);
      if (better(d2, idx, best)) best = {idx, d2};
    }
    return;
  }
  const Node& l = nodes_[node.left];
  const double lx = std::max({l.minx - q.x, 0.0, q.x - l.maxx});
  const double ly = std::max({l.miny - q.y, 0.0, q.y - l.maxy});
  const Node& r = nodes_[node.right];
  const double rx = std::max({r.minx - q.x, 0.0, q.x - r.maxx});
  const double ry = std::max({r.miny - q.y, 0.0, q.y - r.maxy});
  if (lx * lx + ly * ly <= rx * rx + ry * ry) {
    search(node.left, q, best);
    search(node.right, q, best);
  } else {
    search(node.right, q, best);
    search(node.left, q, best);
  }
}

KdTree::Hit KdTree::nearest(const Point& q) const {
  Hit best{kNoIndex, kInfinity};
  if (!nodes_.empty()) search(0, q, best);
  return best;
}

ClosestPair bichromatic_closest_pair(std::span<const Point> points, std::span<const Index> A,
                                     std::span<const Index> B) {
  if (A.empty() || B.empty()) throw Error(ErrorCode::EmptySet, "bichromatic closest pair needs two non-empty sets");
  const bool query_from_a = A.size() <= B.size();
  const auto queries = query_from_a ? A : B;
  const KdTree tree(points, query_from_a ? B : A);

  Index best_a = kNoIndex;
  Index best_b = kNoIndex;
  double best_d2 = kInfinity;
  for (Index q : queries) {
    const auto hit = tree.nearest(points[q]);
    const Index a = query_from_a ? q : hit.index;
    const Index b = query_from_a ? hit.index : q;
    if (std::tie(hit.squared_distance, a, b) < std::tie(best_d2, best_a, best_b)) {
      best_d2 = hit.squared_distance;
      best_a = a;
      best_b = b;
    }
  }
  return {best_a, best_b, distance(points[best_a], points[best_b])};
}

}  // namespace diskspan
