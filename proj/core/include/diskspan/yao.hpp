#pragma once

#include <utility>
#include <vector>

#include "diskspan/geom.hpp"
#include "diskspan/graph.hpp"

namespace diskspan {

/// Directed edges of the modified Yao graph: for each point p and cone i, the
/// closest q in cone i with r_q >= r_p whose disk meets p's (ties to the
/// smaller index). At most 1/eps arcs leave each point.
std::vector<std::pair<Index, Index>> build_modified_yao_arcs(const Instance& inst, const Epsilon& eps);

/// Undirected counterpart of the modified Yao graph, all edges tagged 0.
SpannerGraph build_modified_yao(const Instance& inst, const Epsilon& eps);

}  // namespace diskspan
