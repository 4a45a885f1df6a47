#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "diskspan/geom.hpp"
#include "diskspan/graph.hpp"
#include "diskspan/quadforest.hpp"

namespace diskspan {

/// A shift (alpha, beta) is valid when |alpha|, |beta| <= 2/eps and
/// max(|alpha|, |beta|) >= 1/(2 eps).
bool valid_shift(std::int64_t alpha, std::int64_t beta, const Epsilon& eps);

/// sq translated by (alpha * side, beta * side). Throws InvalidShift.
Square shifted_square(const Square& sq, std::int64_t alpha, std::int64_t beta, const Epsilon& eps);

/// Buckets are keyed by root and shift; the position records which ancestor
/// square of the root the shift was taken from.
struct BucketKey {
  Index root = kNoIndex;  // index into DiskForest::roots
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

struct BucketAssignment {
  BucketKey key;
  int position = 0;  // j: square at depth (root depth - j)
};

/// True when p lies in the position-j ancestor square of the root shifted by
/// (alpha, beta). Exact grid arithmetic.
bool point_in_shift(const CompressedForest& forest, const DiskForest& df, Index root_index, int position,
                    std::int64_t alpha, std::int64_t beta, const Point& p);

/// p's depth-d square center is within 2^-d of the root square's center
/// (d = root depth).
bool in_close_range(const CompressedForest& forest, const DiskForest& df, Index root_index, const Point& p);

/// Bucket of the far edge (u, v) at root `root_index`: u owned by the root,
/// v outside it and outside its close range, r_u <= r_v. The smallest
/// position with a valid shift containing v wins. Throws NotFarEdge.
BucketAssignment assign_edge_to_bucket(const CompressedForest& forest, const DiskForest& df, Index root_index,
                                       Index u, Index v);

struct FarBuckets {
  std::map<BucketKey, Edge> best;                // shortest edge per bucket
  std::map<BucketKey, std::size_t> occupancy;    // candidate edges per bucket
  int max_positions = 0;                         // longest bucket list over roots
};

/// Buckets every far edge of the intersection graph given as adjacency.
FarBuckets far_neighborhood_buckets(const CompressedForest& forest, const DiskForest& df,
                                    const Adjacency& intersection);

/// Same buckets, found by querying a spatial grid instead of reading edges.
FarBuckets far_neighborhood_buckets_by_query(const CompressedForest& forest, const DiskForest& df);

/// Uniform grid over disk centers with cell side 2 (the largest possible
/// intersection distance in a normalized instance).
class DiskGrid {
 public:
  explicit DiskGrid(const Instance& inst);
  /// Indices of disks meeting disk u (u excluded), ascending.
  std::vector<Index> intersecting(Index u) const;

 private:
  const Instance* inst_;
  std::vector<std::pair<Cell, Index>> cells_;  // sorted by (x, y, index)
};

/// All intersecting pairs via the grid, tagged 0.
std::vector<Edge> intersection_edges(const Instance& inst);

struct DgBuildReport {
  std::size_t forest_nodes = 0;
  std::size_t disk_roots = 0;
  std::vector<std::size_t> close_edges_per_node;
  std::size_t far_edges = 0;
  std::map<BucketKey, std::size_t> bucket_occupancy;
  int max_positions = 0;
};

/// (1+eps)-spanner of an arbitrary disk graph over a normalized instance.
SpannerGraph build_dg_spanner(const Instance& inst, const Epsilon& eps, DgBuildReport* report = nullptr);

}  // namespace diskspan
