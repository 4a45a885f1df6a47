#pragma once

#include <functional>
#include <vector>

#include "diskspan/graph.hpp"
#include "diskspan/separator.hpp"

namespace diskspan {

/// B(root) = {} and B(t) = (S(P) u B(P)) n V(t), per node, sorted.
std::vector<std::vector<Index>> boundary_sets(const SeparatorTree& tree);

/// H(t): the spanner restricted to V(t) plus a clique on B(t) whose weights
/// are shortest-path distances in the whole spanner. Vertices are renumbered
/// to positions in `vertices`.
struct AugmentedGraph {
  std::vector<Index> vertices;  // V(t), sorted
  std::vector<Index> boundary;  // B(t), sorted
  Adjacency local;
  std::size_t clique_edges = 0;

  /// Position of global vertex v in `vertices`, or kNoIndex.
  Index local_index(Index v) const;
  /// Distances on H(t) from global vertex v, indexed like `vertices`.
  std::vector<double> distances_from(Index v) const;
};

/// Shortest-path distances by priority-queue relaxation.
inline std::vector<double> sssp(const Adjacency& g, Index source) { return dijkstra(g, source); }

using AugmentedVisitor = std::function<void(const SeparatorNode&, const AugmentedGraph&)>;

/// Walks the tree top-down building every H(t). Clique weights come from
/// the parent's separator SSSP when a pair touches S(P), else from the
/// parent's clique; InductionOrderViolation when neither has it.
void for_each_augmented_graph(const SpannerGraph& spanner, const SeparatorTree& tree, const AugmentedVisitor& visit);

struct DiameterEstimate {
  double dia = 0.0;
  std::vector<double> node_estimate;  // per tree node
};

/// 3/2-approximate diameter of the spanner metric. Disconnected spanners
/// throw DisconnectedGraph unless `per_component`, in which case the largest
/// component diameter estimate is returned.
DiameterEstimate estimate_diameter(const SpannerGraph& spanner, const SeparatorTree& tree,
                                   bool per_component = false);

}  // namespace diskspan
