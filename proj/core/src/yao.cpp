#include "diskspan/yao.hpp"

namespace diskspan {

std::vector<std::pair<Index, Index>> build_modified_yao_arcs(const Instance& inst, const Epsilon& eps) {
  const auto n = static_cast<Index>(inst.size());
  std::vector<std::pair<Index, Index>> arcs;
  std::vector<Index> best(eps.inv());
  std::vector<double> best_d2(eps.inv());
  for (Index p = 0; p < n; ++p) {
    std::fill(best.begin(), best.end(), kNoIndex);
    std::fill(best_d2.begin(), best_d2.end(), kInfinity);
    for (Index q = 0; q < n; ++q) {
      if (q == p || inst.radii[q] < inst.radii[p] || !disks_intersect(p, q, inst)) continue;
      const double d2 = squared_distance(inst.points[p], inst.points[q]);
      const auto cone = cone_index(inst.points[p], inst.points[q], eps);
      // q ascends, so strict < keeps the smaller index on ties.
      if (d2 < best_d2[cone]) {
        best_d2[cone] = d2;
        best[cone] = q;
      }
    }
    for (Index q : best) {
      if (q != kNoIndex) arcs.emplace_back(p, q);
    }
  }
  return arcs;
}

SpannerGraph build_modified_yao(const Instance& inst, const Epsilon& eps) {
  SpannerGraph g;
  g.n = static_cast<Index>(inst.size());
  for (auto [p, q] : build_modified_yao_arcs(inst, eps)) g.edges.push_back(make_edge(inst, p, q, 0));
  g.canonicalize();
  return g;
}

}  // namespace diskspan
