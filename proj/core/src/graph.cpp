#include "diskspan/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace diskspan {

Edge make_edge(const Instance& inst, Index a, Index b, int depth_tag) {
  if (a > b) std::swap(a, b);
  return {a, b, distance(inst.points[a], inst.points[b]), depth_tag};
}

void SpannerGraph::canonicalize() {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.depth_tag < b.depth_tag;
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
              edges.end());
}

Adjacency::Adjacency(Index n, std::span<const Edge> edges) {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (Index i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  arcs_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges) {
    arcs_[fill[e.u]++] = {e.v, e.weight};
    arcs_[fill[e.v]++] = {e.u, e.weight};
  }
}

std::vector<double> dijkstra(const Adjacency& adj, Index source, double cutoff) {
  std::vector<double> dist(adj.vertex_count(), kInfinity);
  using Item = std::pair<double, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const Arc& a : adj.neighbors(u)) {
      const double nd = d + a.weight;
      if (nd < dist[a.to] && nd <= cutoff) {
        dist[a.to] = nd;
        heap.push({nd, a.to});
      }
    }
  }
  return dist;
}

std::vector<Index> connected_components(const Adjacency& adj) {
  const Index n = adj.vertex_count();
  std::vector<Index> comp(n, UINT32_MAX);
  std::vector<Index> stack;
  for (Index s = 0; s < n; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    comp[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (const Arc& a : adj.neighbors(u)) {
        if (comp[a.to] == UINT32_MAX) {
          comp[a.to] = s;
          stack.push_back(a.to);
        }
      }
    }
  }
  return comp;
}

}  // namespace diskspan
