#pragma once

#include <limits>
#include <span>
#include <vector>

#include "diskspan/geom.hpp"

namespace diskspan {


/// Depth tag of edges added between roots' far neighborhoods.
inline constexpr int kFarEdgeTag = -1;

struct Edge {
  Index u = 0;  // u < v
  Index v = 0;
  double weight = 0.0;
  int depth_tag = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Euclidean edge between two instance points with endpoints ordered.
Edge make_edge(const Instance& inst, Index a, Index b, int depth_tag);

/// Weighted undirected edge list. Spanner builders emit it canonicalized:
/// sorted by (u, v), no duplicates.
struct SpannerGraph {
  Index n = 0;
  std::vector<Edge> edges;

  /// Sorts and drops duplicate (u, v) pairs, keeping the smallest depth tag.
  void canonicalize();
  std::size_t size() const { return edges.size(); }
};

struct Arc {
  Index to;
  double weight;
};

/// Compressed adjacency of an undirected graph.
class Adjacency {
 public:
  Adjacency() = default;
  Adjacency(Index n, std::span<const Edge> edges);
  explicit Adjacency(const SpannerGraph& g) : Adjacency(g.n, g.edges) {}

  Index vertex_count() const { return static_cast<Index>(offsets_.size()) - 1; }
  std::span<const Arc> neighbors(Index u) const {
    return std::span<const Arc>(arcs_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
  }
  std::size_t degree(Index u) const { return offsets_[u + 1] - offsets_[u]; }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
};

/// Shortest-path distances from source; vertices farther than `cutoff` (or
/// unreachable) are left at infinity.
std::vector<double> dijkstra(const Adjacency& adj, Index source, double cutoff = kInfinity);

/// Component id per vertex, numbered by smallest member.
std::vector<Index> connected_components(const Adjacency& adj);

}  // namespace diskspan
