#pragma once

#include <iosfwd>
#include <string>

#include "diskspan/geom.hpp"
#include "diskspan/graph.hpp"

namespace diskspan {

/// Line 1 "2 n", then n lines "x y r". Throws Parse with the line number.
/// Returns the instance as written; callers normalize.
Instance read_instance(std::istream& is);
void write_instance(std::ostream& os, const Instance& inst);

/// Line 1 "n m", then m lines "u v weight depthTag" with u < v.
SpannerGraph read_spanner(std::istream& is);
void write_spanner(std::ostream& os, const SpannerGraph& g);

Instance read_instance_file(const std::string& path);
SpannerGraph read_spanner_file(const std::string& path);

}  // namespace diskspan
