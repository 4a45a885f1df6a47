#include "diskspan/udg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace diskspan {

namespace {

bool cell_less(const Cell& a, const Cell& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

double reach(const Epsilon& eps, int depth) {
  return (1.0 + std::numbers::sqrt2 * eps.value()) * std::ldexp(1.0, -depth);
}

}  // namespace

double udg_root_radius(const Epsilon& eps) { return 2.0 - std::numbers::sqrt2 * eps.value(); }

RootGrid::RootGrid(const CompressedForest& forest) : forest_(&forest) {
  const auto& pts = forest.instance().points;
  for (Index r : forest.roots()) cells_.push_back({grid_cell(pts[forest.node(r).rep], forest.eps(), 0), r});
  std::sort(cells_.begin(), cells_.end(), [](const auto& a, const auto& b) { return cell_less(a.first, b.first); });
}

std::vector<Index> RootGrid::annulus(Index root, double inner, double outer) const {
  const auto& pts = forest_->instance().points;
  const double side = forest_->eps().value();
  const Cell c = grid_cell(pts[forest_->node(root).rep], forest_->eps(), 0);
  const auto span = static_cast<std::int64_t>(std::ceil(outer / side));
  std::vector<Index> out;
  // One column of cells at a time: seek to its lowest row, then walk up.
  for (std::int64_t dx = -span; dx <= span; ++dx) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{c.x + dx, c.y - span},
                               [](const auto& e, const Cell& key) { return cell_less(e.first, key); });
    for (; it != cells_.end() && it->first.x == c.x + dx && it->first.y <= c.y + span; ++it) {
      const std::int64_t dy = it->first.y - c.y;
      if (dx == 0 && dy == 0) continue;
      const double d = std::hypot(static_cast<double>(dx), static_cast<double>(dy)) * side;
      if (d > inner && d <= outer) out.push_back(it->second);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> RootGrid::within(Index root, double radius) const {
  return annulus(root, -1.0, radius);
}

std::vector<Index> close_pseudo_neighborhood(const CompressedForest& forest, Index t, int target_depth,
                                             const std::vector<Index>& starts) {
  const auto& pts = forest.instance().points;
  const Point& rt = pts[forest.node(t).rep];
  const double keep_radius = reach(forest.eps(), target_depth);
  std::vector<Index> out;
  std::deque<Index> queue(starts.begin(), starts.end());
  while (!queue.empty()) {
    const Index a = queue.front();
    queue.pop_front();
    bool entered = false;
    for (Index c : forest.node(a).children) {
      const auto& cn = forest.node(c);
      if (cn.depth <= target_depth && distance(pts[cn.rep], rt) <= reach(forest.eps(), cn.depth)) {
        queue.push_back(c);
        entered = true;
      }
    }
    if (!entered && a != t && distance(pts[forest.node(a).rep], rt) <= keep_radius) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Index>> close_pseudo_neighborhoods(const CompressedForest& forest,
                                                           double root_radius) {
  std::vector<std::vector<Index>> nbrs(forest.size());
  const RootGrid grid(forest);
  // Preorder numbering puts every parent before its children.
  for (const auto& n : forest.nodes()) {
    if (n.is_root()) {
      nbrs[n.id] = grid.within(n.id, root_radius);
      continue;
    }
    std::vector<Index> starts = nbrs[n.parent];
    starts.push_back(n.parent);
    nbrs[n.id] = close_pseudo_neighborhood(forest, n.id, n.depth, starts);
  }
  return nbrs;
}

std::vector<ConeCandidate> sparsify_by_cones(const Instance& inst, Index apex,
                                             const std::vector<ConeCandidate>& candidates,
                                             const Epsilon& eps) {
  std::vector<ConeCandidate> best(eps.inv());
  std::vector<double> best_d2(eps.inv(), kInfinity);
  const Point& a = inst.points[apex];
  for (const auto& c : candidates) {
    const auto cone = cone_index(a, inst.points[c.rep], eps);
    const double d2 = squared_distance(a, inst.points[c.rep]);
    if (d2 < best_d2[cone] || (d2 == best_d2[cone] && c.rep < best[cone].rep)) {
      best_d2[cone] = d2;
      best[cone] = c;
    }
  }
  std::vector<ConeCandidate> out;
  for (const auto& c : best) {
    if (c.rep != kNoIndex) out.push_back(c);
  }
  return out;
}

std::vector<Edge> far_neighborhood_edges(const CompressedForest& forest) {
  const auto& inst = forest.instance();
  const double slack = std::numbers::sqrt2 * forest.eps().value();
  const RootGrid grid(forest);
  std::vector<Edge> out;
  for (Index t : forest.roots()) {
    for (Index other : grid.annulus(t, 2.0 - slack, 2.0 + slack)) {
      if (other < t) continue;  // each unordered pair once
      const auto pair = bichromatic_closest_pair(inst.points, forest.points(t), forest.points(other));
      if (disks_intersect(pair.a, pair.b, inst)) out.push_back(make_edge(inst, pair.a, pair.b, kFarEdgeTag));
    }
  }
  return out;
}

SpannerGraph build_udg_spanner(const Instance& inst, const Epsilon& eps, UdgBuildReport* report) {
  if (!inst.is_unit()) throw Error(ErrorCode::NotUnitInstance, "unit disk spanner needs all radii equal to 1");
  const CompressedForest forest = build_compressed_forest(inst, eps, RepMode::Unit);
  const auto nbrs = close_pseudo_neighborhoods(forest, udg_root_radius(eps));

  SpannerGraph g;
  g.n = static_cast<Index>(inst.size());
  std::vector<std::size_t> close_counts(forest.size(), 0);
  for (const auto& n : forest.nodes()) {
    std::vector<ConeCandidate> cands;
    cands.reserve(nbrs[n.id].size());
    for (Index b : nbrs[n.id]) cands.push_back({b, forest.node(b).rep});
    const auto kept = sparsify_by_cones(inst, n.rep, cands, eps);
    for (const auto& c : kept) g.edges.push_back(make_edge(inst, n.rep, c.rep, n.depth));
    close_counts[n.id] = kept.size();
  }

  const auto far = far_neighborhood_edges(forest);
  g.edges.insert(g.edges.end(), far.begin(), far.end());
  g.canonicalize();

  if (report != nullptr) {
    report->forest_nodes = forest.size();
    report->close_edges_per_node = std::move(close_counts);
    report->far_edges = far.size();
  }
  return g;
}

}  // namespace diskspan
