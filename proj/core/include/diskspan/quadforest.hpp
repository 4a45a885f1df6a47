#pragma once

#include <climits>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "diskspan/geom.hpp"
#include "diskspan/zorder.hpp"

namespace diskspan {

inline constexpr Index kNoNode = UINT32_MAX;

/// One interesting node of the compressed quad-dissection.
///
/// A node stands for the chain of dissection squares that all hold exactly
/// the points of C(t). `depth` is the top of that chain (the square where the
/// set first appears, side eps * 2^-depth); the chain runs down to one above
/// the children's depth, and without end for leaves.
struct ForestNode {
  Index id = kNoNode;
  int depth = 0;
  Index parent = kNoNode;
  std::vector<Index> children;  // Morton order; all share one depth
  Index rep = kNoNode;          // representative point R_t
  Index lo = 0;                 // C(t) = order[lo, hi)
  Index hi = 0;

  bool is_root() const { return parent == kNoNode; }
  bool is_leaf() const { return children.empty(); }
  Index size() const { return hi - lo; }
};

enum class RepMode { Unit, ByRadius };

/// Compressed quad-dissection forest over the epsilon-grid. Built once,
/// immutable afterwards.
class CompressedForest {
 public:
  CompressedForest(const Instance& inst, Epsilon eps, MortonFrame frame, std::vector<Index> order,
                   std::vector<ForestNode> nodes);

  const std::vector<ForestNode>& nodes() const { return nodes_; }
  const ForestNode& node(Index id) const { return nodes_[id]; }
  const std::vector<Index>& roots() const { return roots_; }
  const std::vector<Index>& order() const { return order_; }
  std::span<const Index> points(Index id) const {
    const auto& n = nodes_[id];
    return std::span<const Index>(order_).subspan(n.lo, n.hi - n.lo);
  }
  const Epsilon& eps() const { return eps_; }
  const MortonFrame& frame() const { return frame_; }
  const Instance& instance() const { return *inst_; }
  std::size_t size() const { return nodes_.size(); }

  /// Deepest depth whose dissection square still holds exactly C(t).
  int chain_end(Index id) const {
    const auto& n = nodes_[id];
    return n.is_leaf() ? INT_MAX : nodes_[n.children.front()].depth - 1;
  }

  /// Dissection square at `depth` containing R_t (any depth, not just the
  /// node's own).
  Square square_at(Index id, int depth) const;
  Square square(Index id) const { return square_at(id, nodes_[id].depth); }

  /// Rewrites representatives: leaves keep their point; internal nodes take a
  /// child's representative (first child for Unit, largest radius for
  /// ByRadius with ties to the smaller point index).
  void assign_representatives(RepMode mode);

 private:
  const Instance* inst_;
  Epsilon eps_;
  MortonFrame frame_;
  std::vector<Index> order_;
  std::vector<ForestNode> nodes_;
  std::vector<Index> roots_;
};

/// Stack-based construction over the Morton order. Nodes are numbered in
/// preorder, roots and children in Morton order. The instance must outlive
/// the forest.
CompressedForest build_compressed_forest(const Instance& inst, Epsilon eps,
                                         RepMode mode = RepMode::Unit);

/// Integer cell coordinates of p in the grid of side eps * 2^-depth.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};
Cell grid_cell(const Point& p, const Epsilon& eps, int depth);

/// Canonical description of a forest node, comparable across builders.
struct CanonicalNode {
  int depth = 0;
  Cell cell;
  int parent_depth = -1;
  Cell parent_cell;
  std::vector<Index> points;  // sorted

  friend bool operator==(const CanonicalNode&, const CanonicalNode&) = default;
  friend auto operator<=>(const CanonicalNode& a, const CanonicalNode& b) {
    if (auto c = a.depth <=> b.depth; c != 0) return c;
    if (auto c = a.cell.x <=> b.cell.x; c != 0) return c;
    if (auto c = a.cell.y <=> b.cell.y; c != 0) return c;
    return a.points <=> b.points;
  }
};
std::vector<CanonicalNode> canonical_form(const CompressedForest& forest);

/// Roots of the disk-graph forest: a disk of level l only enters C(t) at
/// depth >= l, so subtrees whose parent square is masked empty start new
/// roots, possibly inside a node's chain.
struct DiskRoot {
  Index node = kNoNode;
  int depth = 0;  // depth of the root square, within [node.depth, chain_end]
};

struct DiskForest {
  std::vector<int> min_level;          // per node: smallest disk level in C(t)
  std::vector<int> active_depth;       // per node: first chain depth with a non-empty masked set, -1 if none
  std::vector<DiskRoot> roots;         // preorder
  std::vector<Index> root_of_node;     // node -> index into roots, or kNoNode
  std::vector<Index> owner;            // point -> index into roots whose tree introduces it

  /// Points whose level-l square (l = their level) lies in the root's tree:
  /// the deepest root above that square.
  std::vector<Index> owned_points(const CompressedForest& forest, Index root_index) const;
};

/// Requires ByRadius representatives.
DiskForest split_roots_by_radius(const CompressedForest& forest);

/// "id depth corner_x corner_y side rep lo hi parent", one node per line.
void write_forest_dump(std::ostream& os, const CompressedForest& forest);

}  // namespace diskspan
