#include "diskspan/dg.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "diskspan/udg.hpp"

namespace diskspan {

namespace {

bool cell_less(const std::pair<Cell, Index>& a, const std::pair<Cell, Index>& b) {
  return std::tie(a.first.x, a.first.y, a.second) < std::tie(b.first.x, b.first.y, b.second);
}

Cell coarse_cell(const Point& p) {
  return {static_cast<std::int64_t>(std::floor(p.x / 2.0)), static_cast<std::int64_t>(std::floor(p.y / 2.0))};
}

bool shorter(const Edge& a, const Edge& b) { return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v); }

void offer(FarBuckets& fb, const CompressedForest& forest, const DiskForest& df, Index ri, Index u, Index v) {
  const auto& inst = forest.instance();
  if (inst.radii[u] > inst.radii[v] || df.owner[v] == ri) return;
  if (in_close_range(forest, df, ri, inst.points[v])) return;
  const BucketAssignment a = assign_edge_to_bucket(forest, df, ri, u, v);
  const Edge e = make_edge(inst, u, v, kFarEdgeTag);
  ++fb.occupancy[a.key];
  auto [it, fresh] = fb.best.try_emplace(a.key, e);
  if (!fresh && shorter(e, it->second)) it->second = e;
}

template <typename NeighborsOf>
FarBuckets collect(const CompressedForest& forest, const DiskForest& df, NeighborsOf&& neighbors_of) {
  FarBuckets fb;
  for (Index ri = 0; ri < df.roots.size(); ++ri) {
    fb.max_positions = std::max(fb.max_positions, df.roots[ri].depth + 1);
    for (Index u : df.owned_points(forest, ri)) neighbors_of(u, [&](Index v) { offer(fb, forest, df, ri, u, v); });
  }
  return fb;
}

}  // namespace

bool valid_shift(std::int64_t alpha, std::int64_t beta, const Epsilon& eps) {
  const std::int64_t inv = eps.inv();
  const std::int64_t a = std::abs(alpha);
  const std::int64_t b = std::abs(beta);
  // 2 * max >= inv is max >= 1/(2 eps) without rounding.
  return a <= 2 * inv && b <= 2 * inv && 2 * std::max(a, b) >= inv;
}

Square shifted_square(const Square& sq, std::int64_t alpha, std::int64_t beta, const Epsilon& eps) {
  if (!valid_shift(alpha, beta, eps)) throw Error(ErrorCode::InvalidShift, "shift outside the allowed range");
  return {{sq.center.x + static_cast<double>(alpha) * sq.side, sq.center.y + static_cast<double>(beta) * sq.side},
          sq.side};
}

bool point_in_shift(const CompressedForest& forest, const DiskForest& df, Index root_index, int position,
                    std::int64_t alpha, std::int64_t beta, const Point& p) {
  const DiskRoot& r = df.roots[root_index];
  const int depth = r.depth - position;
  if (position < 0 || depth < 0 || !valid_shift(alpha, beta, forest.eps())) return false;
  const Cell base = grid_cell(forest.instance().points[forest.node(r.node).rep], forest.eps(), depth);
  const Cell c = grid_cell(p, forest.eps(), depth);
  return c.x - base.x == alpha && c.y - base.y == beta;
}

bool in_close_range(const CompressedForest& forest, const DiskForest& df, Index root_index, const Point& p) {
  const DiskRoot& r = df.roots[root_index];
  const Cell base = grid_cell(forest.instance().points[forest.node(r.node).rep], forest.eps(), r.depth);
  const Cell c = grid_cell(p, forest.eps(), r.depth);
  const std::int64_t dx = c.x - base.x;
  const std::int64_t dy = c.y - base.y;
  const std::int64_t inv = forest.eps().inv();
  return dx * dx + dy * dy <= inv * inv;
}

BucketAssignment assign_edge_to_bucket(const CompressedForest& forest, const DiskForest& df, Index root_index,
                                       Index u, Index v) {
  const auto& inst = forest.instance();
  if (df.owner[u] != root_index) throw Error(ErrorCode::NotFarEdge, "u is not owned by the root");
  if (df.owner[v] == root_index) throw Error(ErrorCode::NotFarEdge, "v is owned by the root");
  if (inst.radii[u] > inst.radii[v]) throw Error(ErrorCode::NotFarEdge, "r_u > r_v");
  if (in_close_range(forest, df, root_index, inst.points[v]))
    throw Error(ErrorCode::NotFarEdge, "v is in the close neighborhood");
  const DiskRoot& r = df.roots[root_index];
  const Point& rep = inst.points[forest.node(r.node).rep];
  for (int j = 0; j <= r.depth; ++j) {
    const Cell base = grid_cell(rep, forest.eps(), r.depth - j);
    const Cell c = grid_cell(inst.points[v], forest.eps(), r.depth - j);
    const std::int64_t alpha = c.x - base.x;
    const std::int64_t beta = c.y - base.y;
    if (valid_shift(alpha, beta, forest.eps())) return {{root_index, alpha, beta}, j};
  }
  throw Error(ErrorCode::NotFarEdge, "no shifted square contains v");
}

DiskGrid::DiskGrid(const Instance& inst) : inst_(&inst) {
  cells_.reserve(inst.size());
  for (Index i = 0; i < inst.size(); ++i) cells_.push_back({coarse_cell(inst.points[i]), i});
  std::sort(cells_.begin(), cells_.end(), cell_less);
}

std::vector<Index> DiskGrid::intersecting(Index u) const {
  const Cell c = coarse_cell(inst_->points[u]);
  std::vector<Index> out;
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      const Cell key{c.x + dx, c.y + dy};
      auto lo = std::lower_bound(cells_.begin(), cells_.end(), std::pair<Cell, Index>{key, 0}, cell_less);
      for (auto it = lo; it != cells_.end() && it->first == key; ++it) {
        if (it->second != u && disks_intersect(u, it->second, *inst_)) out.push_back(it->second);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> intersection_edges(const Instance& inst) {
  const DiskGrid grid(inst);
  std::vector<Edge> out;
  for (Index u = 0; u < inst.size(); ++u) {
    for (Index v : grid.intersecting(u)) {
      if (u < v) out.push_back(make_edge(inst, u, v, 0));
    }
  }
  return out;
}

FarBuckets far_neighborhood_buckets(const CompressedForest& forest, const DiskForest& df,
                                    const Adjacency& intersection) {
  return collect(forest, df, [&](Index u, auto&& visit) {
    for (const Arc& a : intersection.neighbors(u)) visit(a.to);
  });
}

FarBuckets far_neighborhood_buckets_by_query(const CompressedForest& forest, const DiskForest& df) {
  const DiskGrid grid(forest.instance());
  return collect(forest, df, [&](Index u, auto&& visit) {
    for (Index v : grid.intersecting(u)) visit(v);
  });
}

SpannerGraph build_dg_spanner(const Instance& inst, const Epsilon& eps, DgBuildReport* report) {
  const CompressedForest forest = build_compressed_forest(inst, eps, RepMode::ByRadius);
  const DiskForest df = split_roots_by_radius(forest);
  const auto nbrs = close_pseudo_neighborhoods(forest, 1.0);

  SpannerGraph g;
  g.n = static_cast<Index>(inst.size());
  std::vector<std::size_t> close_counts(forest.size(), 0);
  for (const auto& n : forest.nodes()) {
    const int e = df.active_depth[n.id];
    if (e < 0) continue;
    std::vector<Index> found;
    if (e == n.depth) {
      found = nbrs[n.id];
    } else {
      std::vector<Index> starts = nbrs[n.id];
      starts.push_back(n.id);
      found = close_pseudo_neighborhood(forest, n.id, e, starts);
    }
    std::vector<ConeCandidate> cands;
    for (Index c : found) {
      const Index rep = forest.node(c).rep;
      if (df.min_level[c] <= e && disks_intersect(n.rep, rep, inst)) cands.push_back({c, rep});
    }
    const auto kept = sparsify_by_cones(inst, n.rep, cands, eps);
    for (const auto& c : kept) g.edges.push_back(make_edge(inst, n.rep, c.rep, e));
    close_counts[n.id] = kept.size();
  }

  const auto all = intersection_edges(inst);
  FarBuckets fb = far_neighborhood_buckets(forest, df, Adjacency(g.n, all));
  for (const auto& [key, e] : fb.best) g.edges.push_back(e);
  g.canonicalize();

  if (report != nullptr) {
    report->forest_nodes = forest.size();
    report->disk_roots = df.roots.size();
    report->close_edges_per_node = std::move(close_counts);
    report->far_edges = fb.best.size();
    report->bucket_occupancy = std::move(fb.occupancy);
    report->max_positions = fb.max_positions;
  }
  return g;
}

}  // namespace diskspan
