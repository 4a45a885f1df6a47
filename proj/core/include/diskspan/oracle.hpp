#pragma once

#include <span>
#include <vector>

#include "diskspan/bcp.hpp"
#include "diskspan/geom.hpp"
#include "diskspan/graph.hpp"
#include "diskspan/quadforest.hpp"

namespace diskspan {

struct OracleConfig {
  std::size_t max_vertices = 5000;
};

/// Every intersecting pair, by testing all O(n^2) pairs. Tagged 0.
/// Throws OracleTooLarge above the configured cap.
SpannerGraph build_intersection_graph(const Instance& inst, const OracleConfig& config = {});

/// One distance row per source; infinity for unreachable vertices.
std::vector<std::vector<double>> shortest_paths(const SpannerGraph& g, std::span<const Index> sources);
/// All-pairs distance matrix.
std::vector<std::vector<double>> shortest_paths(const SpannerGraph& g);

/// Distances by Bellman-Ford relaxation, O(nm).
std::vector<double> bellman_ford(const SpannerGraph& g, Index source);

struct StretchResult {
  double max_ratio = 1.0;
  Index u = kNoIndex;  // witness edge of G attaining max_ratio
  Index v = kNoIndex;
  bool pass = true;
};

/// max over edges (u, v) of g of d_spanner(u, v) / |uv|; passes when it is at
/// most bound (up to 1e-12 relative rounding slack). Throws NotSubgraph when
/// the spanner has an edge g lacks.
StretchResult verify_stretch(const SpannerGraph& g, const SpannerGraph& spanner, double bound);

/// Direct recursive 4-way subdivision of the eps-grid cells with
/// single-child chains removed. Unit representatives.
CompressedForest naive_quadtree(const Instance& inst, const Epsilon& eps);

/// Quadratic scan with the same tie rule as bichromatic_closest_pair.
ClosestPair brute_bcp(std::span<const Point> points, std::span<const Index> a, std::span<const Index> b);

/// Stretch bounds used by verification.
///
/// c_s = 2 sqrt2 bounds the representative detour inside a node. The unit
/// construction needs c_u >= 4 c_s / (1 - 2 c_s eps). For eps >= 1/8 the
/// bound is max(1 + c_u eps, 3), which is 3 where the denominator is not
/// positive (eps >= 1/4). The disk graph bound composes the unit one
/// with the level and bucket terms: c_2 = (2 + c_u' eps) c_s,
/// c_1 = c_2 + 2 c_s + 2 c_s c_2 eps, bound (1 + c_1 eps) * udg_bound where
/// c_u' = (udg_bound - 1) / eps.
struct StretchConstants {
  static constexpr double c_s = 2.8284271247461903;
  static double c_u(const Epsilon& eps);
  static double udg_bound(const Epsilon& eps);
  static double dg_bound(const Epsilon& eps);
  static double yao_bound(const Epsilon& eps);
};

}  // namespace diskspan
