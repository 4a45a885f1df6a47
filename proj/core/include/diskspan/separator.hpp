#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "diskspan/geom.hpp"
#include "diskspan/graph.hpp"

namespace diskspan {

enum class Axis { Vertical, Horizontal };

/// The two lines of a double line separator, as coordinates on the cut
/// axis (x for Vertical). A side with no wide block stays infinite.
struct DoubleLine {
  double l1 = -kInfinity;
  double l2 = kInfinity;
  bool l1_found = false;
  bool l2_found = false;
  std::size_t block = 0;  // gaps per block
};

/// Cuts the sorted coordinates into blocks of ceil(sqrt(n_total) eps^-3/2)
/// gaps starting at the median pair and walks outward to the first block
/// spanning at least 2^(-level+2). L1 sits 2^(-level+1) left of that block's
/// right end, L2 2^(-level+1) right of its left end. Throws DegenerateAxis
/// when the vertices share one coordinate.
DoubleLine double_line_separator(const Instance& inst, std::span<const Index> vertices, Axis axis, int level,
                                 const Epsilon& eps, std::size_t n_total);

struct LineCut {
  Axis axis = Axis::Vertical;
  int level = 0;
  DoubleLine lines;
};

struct SeparatorNode {
  Index id = kNoIndex;
  Index parent = kNoIndex;
  Index child[2] = {kNoIndex, kNoIndex};
  std::vector<Index> vertices;   // V(t), sorted
  std::vector<Index> separator;  // S(t), sorted
  std::vector<LineCut> cuts;     // lines drawn while splitting t

  bool is_leaf() const { return child[0] == kNoIndex; }
};

/// Nodes in preorder; node 0 is the root.
struct SeparatorTree {
  std::vector<SeparatorNode> nodes;
  std::size_t leaf_max = 32;
};

/// Edges tagged l must be no longer than 2^(-max(l,0)+1). Throws
/// SeparatorInvariantViolation with the offending edge.
void check_edge_lengths(const SpannerGraph& spanner);

/// Recursive double line separator decomposition of the spanner. A node
/// where no split makes progress keeps S = V and has no children.
SeparatorTree build_separator_decomposition(const SpannerGraph& spanner, const Instance& inst, const Epsilon& eps,
                                            std::size_t leaf_max = 32);

struct SeparatorReport {
  std::size_t nodes = 0;
  std::size_t max_separator = 0;
  std::size_t root_separator = 0;
  double max_ratio = 0.0;  // max |S| eps^(3/2) / sqrt|V|
};

/// Checks disconnection, 2/3 balance and leaf size on every node. Throws
/// SeparatorInvariantViolation with a witness.
SeparatorReport verify_separator(const SeparatorTree& tree, const SpannerGraph& spanner, const Epsilon& eps);

/// "nodes total_v total_s", then per node in preorder
/// "id parent |V| |S| v_offset s_offset", then the V and S index arrays.
void write_separator_dump(std::ostream& os, const SeparatorTree& tree);

}  // namespace diskspan
