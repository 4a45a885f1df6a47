#include "diskspan/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace diskspan {

SpannerGraph build_intersection_graph(const Instance& inst, const OracleConfig& config) {
  if (inst.size() > config.max_vertices) throw Error(ErrorCode::OracleTooLarge, "instance exceeds the oracle cap");
  SpannerGraph g;
  g.n = static_cast<Index>(inst.size());
  for (Index i = 0; i < g.n; ++i) {
    for (Index j = i + 1; j < g.n; ++j) {
      if (disks_intersect(i, j, inst)) g.edges.push_back(make_edge(inst, i, j, 0));
    }
  }
  return g;
}

std::vector<std::vector<double>> shortest_paths(const SpannerGraph& g, std::span<const Index> sources) {
  const Adjacency adj(g);
  std::vector<std::vector<double>> rows;
  rows.reserve(sources.size());
  for (Index s : sources) rows.push_back(dijkstra(adj, s));
  return rows;
}

std::vector<std::vector<double>> shortest_paths(const SpannerGraph& g) {
  std::vector<Index> all(g.n);
  for (Index i = 0; i < g.n; ++i) all[i] = i;
  return shortest_paths(g, all);
}

std::vector<double> bellman_ford(const SpannerGraph& g, Index source) {
  std::vector<double> d(g.n, kInfinity);
  d[source] = 0.0;
  for (Index round = 0; round < g.n; ++round) {
    bool changed = false;
    for (const Edge& e : g.edges) {
      if (d[e.u] + e.weight < d[e.v]) {
        d[e.v] = d[e.u] + e.weight;
        changed = true;
      }
      if (d[e.v] + e.weight < d[e.u]) {
        d[e.u] = d[e.v] + e.weight;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return d;
}

StretchResult verify_stretch(const SpannerGraph& g, const SpannerGraph& spanner, double bound) {
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(g.edges.size());
  for (const Edge& e : g.edges) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  for (const Edge& e : spanner.edges) {
    if (!std::binary_search(pairs.begin(), pairs.end(), std::pair{std::min(e.u, e.v), std::max(e.u, e.v)})) {
      throw Error(ErrorCode::NotSubgraph,
                  "spanner edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
    }
  }

  const Adjacency full(g);
  const Adjacency sp(spanner);
  StretchResult r;
  for (Index u = 0; u < g.n; ++u) {
    double longest = 0.0;
    for (const Arc& a : full.neighbors(u)) {
      if (a.to > u) longest = std::max(longest, a.weight);
    }
    if (longest == 0.0) continue;
    // Distances past the cutoff already fail the bound; recompute exactly then.
    auto d = dijkstra(sp, u, bound * longest * (1.0 + 1e-9));
    bool exact = false;
    for (const Arc& a : full.neighbors(u)) {
      if (a.to <= u) continue;
      if (d[a.to] == kInfinity && !exact) {
        d = dijkstra(sp, u);
        exact = true;
      }
      const double ratio = d[a.to] / a.weight;
      if (ratio > r.max_ratio) {
        r.max_ratio = ratio;
        r.u = u;
        r.v = a.to;
      }
    }
  }
  r.pass = r.max_ratio <= bound * (1.0 + 1e-12);
  return r;
}

namespace {

class NaiveBuilder {
 public:
  NaiveBuilder(const Instance& inst, const Epsilon& eps) : inst_(inst), eps_(eps) {}

  void add_tree(std::vector<Index> pts) { make(std::move(pts), 0, 0, kNoNode); }

  std::vector<Index> order;
  std::vector<ForestNode> nodes;

 private:
  const Instance& inst_;
  const Epsilon& eps_;

  // pts all lie in one square at depth `cur`; the set first appeared at `top`.
  void make(std::vector<Index> pts, int top, int cur, Index parent) {
    if (pts.size() == 1) {
      push_node(top, parent, pts.front());
      order.push_back(pts.front());
      nodes.back().hi = static_cast<Index>(order.size());
      return;
    }
    if (cur > 256) throw Error(ErrorCode::QuantizationCollision, "points not separable by subdivision");
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Index>> quads;
    for (Index p : pts) {
      const Cell c = grid_cell(inst_.points[p], eps_, cur + 1);
      quads[{c.x, c.y}].push_back(p);
    }
    if (quads.size() == 1) {
      make(std::move(pts), top, cur + 1, parent);
      return;
    }
    const Index id = push_node(top, parent, kNoNode);
    for (auto& [cell, sub] : quads) {
      const auto child = static_cast<Index>(nodes.size());
      nodes[id].children.push_back(child);
      make(std::move(sub), cur + 1, cur + 1, id);
    }
    nodes[id].hi = static_cast<Index>(order.size());
  }

  Index push_node(int depth, Index parent, Index rep) {
    ForestNode n;
    n.id = static_cast<Index>(nodes.size());
    n.depth = depth;
    n.parent = parent;
    n.rep = rep;
    n.lo = static_cast<Index>(order.size());
    nodes.push_back(std::move(n));
    return nodes.back().id;
  }
};

}  // namespace

CompressedForest naive_quadtree(const Instance& inst, const Epsilon& eps) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Index>> cells;
  for (Index i = 0; i < inst.size(); ++i) {
    const Cell c = grid_cell(inst.points[i], eps, 0);
    cells[{c.x, c.y}].push_back(i);
  }
  NaiveBuilder b(inst, eps);
  for (auto& [cell, pts] : cells) b.add_tree(std::move(pts));
  CompressedForest f(inst, eps, MortonFrame::for_instance(inst), std::move(b.order), std::move(b.nodes));
  f.assign_representatives(RepMode::Unit);
  return f;
}

ClosestPair brute_bcp(std::span<const Point> points, std::span<const Index> a, std::span<const Index> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "closest pair of an empty set");
  ClosestPair best{kNoIndex, kNoIndex, kInfinity};
  double best_d2 = kInfinity;
  for (Index i : a) {
    for (Index j : b) {
      const double d2 = squared_distance(points[i], points[j]);
      if (std::tie(d2, i, j) < std::tie(best_d2, best.a, best.b)) {
        best_d2 = d2;
        best = {i, j, 0.0};
      }
    }
  }
  best.distance = std::sqrt(best_d2);
  return best;
}

double StretchConstants::c_u(const Epsilon& eps) {
  // No admissible constant once the denominator is not positive.
  const double denom = 1.0 - 2.0 * c_s * eps.value();
  return denom > 0.0 ? 4.0 * c_s / denom : kInfinity;
}

double StretchConstants::udg_bound(const Epsilon& eps) {
  const double cu = c_u(eps);
  const double raw = cu == kInfinity ? -kInfinity : 1.0 + cu * eps.value();
  return eps.inv() <= 8 ? std::max(raw, 3.0) : raw;
}

double StretchConstants::dg_bound(const Epsilon& eps) {
  const double e = eps.value();
  const double u = udg_bound(eps);
  const double cu_eff = (u - 1.0) / e;
  const double c2 = (2.0 + cu_eff * e) * c_s;
  const double c1 = c2 + 2.0 * c_s + 2.0 * c_s * c2 * e;
  return (1.0 + c1 * e) * u;
}

double StretchConstants::yao_bound(const Epsilon& eps) { return 1.0 + eps.value(); }

}  // namespace diskspan
