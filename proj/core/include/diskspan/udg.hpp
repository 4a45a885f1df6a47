#pragma once

#include <vector>

#include "diskspan/bcp.hpp"
#include "diskspan/geom.hpp"
#include "diskspan/graph.hpp"
#include "diskspan/quadforest.hpp"

namespace diskspan {

/// Roots whose squares have centers within `radius` of root t's center,
/// excluding t, sorted by id. Looked up column by column in the sorted
/// root cells.
class RootGrid {
 public:
  explicit RootGrid(const CompressedForest& forest);
  std::vector<Index> within(Index root, double radius) const;
  /// Roots at center distance in (inner, outer].
  std::vector<Index> annulus(Index root, double inner, double outer) const;

 private:
  const CompressedForest* forest_;
  std::vector<std::pair<Cell, Index>> cells_;  // sorted by (x, y)
};

/// Bounded traversal producing the close pseudo-neighborhood of t at
/// `target_depth`: starting from `starts`, a child c is entered when
/// d_c <= target_depth and |R_c R_t| <= (1 + sqrt2 eps) 2^-d_c; nodes with no
/// entered child end the traversal and are kept (t excluded) when
/// |R_b R_t| <= (1 + sqrt2 eps) 2^-target_depth. Sorted by id.
std::vector<Index> close_pseudo_neighborhood(const CompressedForest& forest, Index t, int target_depth,
                                             const std::vector<Index>& starts);

/// Pseudo-neighborhood of every node at its own depth. Roots take the roots
/// within `root_radius` (center distance); every other node is traversed from
/// its parent and the parent's pseudo-neighborhood.
std::vector<std::vector<Index>> close_pseudo_neighborhoods(const CompressedForest& forest,
                                                           double root_radius);

/// Candidate (node, representative) for cone sparsification.
struct ConeCandidate {
  Index node = kNoIndex;
  Index rep = kNoIndex;
};

/// Keeps, per cone around `apex`, the candidate whose representative is
/// closest (ties to the smaller point index). Result sorted by cone.
std::vector<ConeCandidate> sparsify_by_cones(const Instance& inst, Index apex,
                                             const std::vector<ConeCandidate>& candidates,
                                             const Epsilon& eps);

/// Far edges between roots whose centers lie in the annulus
/// (2 - sqrt2 eps, 2 + sqrt2 eps]: one bichromatic closest pair per root
/// pair, kept when the two unit disks meet.
std::vector<Edge> far_neighborhood_edges(const CompressedForest& forest);

struct UdgBuildReport {
  std::size_t forest_nodes = 0;
  std::vector<std::size_t> close_edges_per_node;
  std::size_t far_edges = 0;
};

/// (1+eps)-spanner of a unit disk graph. Requires a normalized instance whose
/// radii are all 1 (NotUnitInstance otherwise).
SpannerGraph build_udg_spanner(const Instance& inst, const Epsilon& eps, UdgBuildReport* report = nullptr);

/// Radius of the root-level close neighborhood in the unit case.
double udg_root_radius(const Epsilon& eps);

}  // namespace diskspan
