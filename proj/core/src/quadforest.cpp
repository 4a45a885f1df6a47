#include "diskspan/quadforest.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <ostream>

namespace diskspan {

CompressedForest::CompressedForest(const Instance& inst, Epsilon eps, MortonFrame frame,
                                   std::vector<Index> order, std::vector<ForestNode> nodes)
    : inst_(&inst), eps_(eps), frame_(frame), order_(std::move(order)), nodes_(std::move(nodes)) {
  for (const auto& n : nodes_) {
    if (n.is_root()) roots_.push_back(n.id);
  }
}

Square CompressedForest::square_at(Index id, int depth) const {
  const Point& r = inst_->points[nodes_[id].rep];
  const int level = eps_.log_inv() + depth;
  const Point corner{round_to_grid(r.x, level), round_to_grid(r.y, level)};
  return Square::from_corner(corner, std::ldexp(1.0, -level));
}

void CompressedForest::assign_representatives(RepMode mode) {
  // Children have larger ids than their parent (preorder), so a reverse sweep
  // sees every child before its parent.
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    auto& n = *it;
    if (n.is_leaf()) {
      n.rep = order_[n.lo];
      continue;
    }
    Index best = nodes_[n.children.front()].rep;
    if (mode == RepMode::ByRadius) {
      for (Index c : n.children) {
        const Index cand = nodes_[c].rep;
        const double rc = inst_->radii[cand];
        const double rb = inst_->radii[best];
        if (rc > rb || (rc == rb && cand < best)) best = cand;
      }
    }
    n.rep = best;
  }
}

namespace {

constexpr int kNegInf = INT_MIN;

struct BinaryNode {
  int depth = 0;
  Index first = 0;  // leaf: Morton position; internal: unused
  Index left = kNoNode;
  Index right = kNoNode;
  bool leaf() const { return left == kNoNode; }
};

struct StackEntry {
  int label;
  Index node;
};

class ForestBuilder {
 public:
  explicit ForestBuilder(std::size_t n) { bin_.reserve(2 * n); }

  void run(const std::vector<MortonKey>& keys, int level_base) {
    const std::size_t n = keys.size();
    stack_.push_back({kNegInf, new_leaf(0)});
    for (std::size_t i = 1; i < n; ++i) {
      const int sep = agree(keys[i - 1], keys[i], level_base) + 1;
      if (sep <= 0) {
        flush();
        stack_.push_back({kNegInf, new_leaf(static_cast<Index>(i))});
        continue;
      }
      while (sep <= stack_.back().label) merge_top();
      stack_.push_back({sep, new_leaf(static_cast<Index>(i))});
    }
    flush();
  }

  std::vector<ForestNode> materialize() {
    std::vector<ForestNode> out;
    out.reserve(bin_.size());
    for (Index r : bin_roots_) emit(r, kNoNode, out);
    return out;
  }

 private:
  Index new_leaf(Index pos) {
    bin_.push_back({0, pos, kNoNode, kNoNode});
    return static_cast<Index>(bin_.size() - 1);
  }

  void merge_top() {
    const StackEntry top = stack_.back();
    stack_.pop_back();
    const StackEntry below = stack_.back();
    stack_.pop_back();
    bin_[top.node].depth = top.label;
    bin_[below.node].depth = top.label;
    bin_.push_back({0, 0, below.node, top.node});
    stack_.push_back({below.label, static_cast<Index>(bin_.size() - 1)});
  }

  void flush() {
    while (stack_.size() >= 2) merge_top();
    bin_[stack_.back().node].depth = 0;
    bin_roots_.push_back(stack_.back().node);
    stack_.clear();
  }

  // Shortcuts binary nodes that share their children's depth, producing the
  // 4-ary compressed form in preorder.
  Index emit(Index b, Index parent, std::vector<ForestNode>& out) {
    const BinaryNode& bn = bin_[b];
    const auto id = static_cast<Index>(out.size());
    out.push_back({});
    out[id].id = id;
    out[id].depth = bn.depth;
    out[id].parent = parent;
    if (bn.leaf()) {
      out[id].lo = bn.first;
      out[id].hi = bn.first + 1;
      return id;
    }
    std::vector<Index> kids;
    collect_children(b, kids);
    out[id].lo = UINT32_MAX;
    for (Index k : kids) {
      const Index cid = emit(k, id, out);
      out[id].children.push_back(cid);
      out[id].lo = std::min(out[id].lo, out[cid].lo);
      out[id].hi = std::max(out[id].hi, out[cid].hi);
    }
    return id;
  }

  void collect_children(Index b, std::vector<Index>& kids) const {
    for (Index c : {bin_[b].left, bin_[b].right}) {
      const BinaryNode& cn = bin_[c];
      if (!cn.leaf() && bin_[cn.left].depth == cn.depth) {
        collect_children(c, kids);
      } else {
        kids.push_back(c);
      }
    }
  }

  std::vector<BinaryNode> bin_;
  std::vector<StackEntry> stack_;
  std::vector<Index> bin_roots_;
};

}  // namespace

CompressedForest build_compressed_forest(const Instance& inst, Epsilon eps, RepMode mode) {
  validate_instance(inst);
  const MortonFrame frame = MortonFrame::for_instance(inst);
  std::vector<Index> order = morton_sort(inst, frame);
  std::vector<MortonKey> keys(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) keys[i] = frame.key(inst.points[order[i]]);

  ForestBuilder builder(order.size());
  builder.run(keys, frame.level_of(eps.log_inv()));
  CompressedForest forest(inst, eps, frame, std::move(order), builder.materialize());
  forest.assign_representatives(mode);
  return forest;
}

Cell grid_cell(const Point& p, const Epsilon& eps, int depth) {
  const int level = eps.log_inv() + depth;
  return {static_cast<std::int64_t>(std::floor(std::ldexp(p.x, level))),
          static_cast<std::int64_t>(std::floor(std::ldexp(p.y, level)))};
}

std::vector<CanonicalNode> canonical_form(const CompressedForest& forest) {
  const auto& pts = forest.instance().points;
  std::vector<CanonicalNode> out;
  out.reserve(forest.size());
  for (const auto& n : forest.nodes()) {
    CanonicalNode c;
    c.depth = n.depth;
    c.cell = grid_cell(pts[n.rep], forest.eps(), n.depth);
    if (!n.is_root()) {
      const auto& p = forest.node(n.parent);
      c.parent_depth = p.depth;
      c.parent_cell = grid_cell(pts[p.rep], forest.eps(), p.depth);
    }
    auto span = forest.points(n.id);
    c.points.assign(span.begin(), span.end());
    std::sort(c.points.begin(), c.points.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> DiskForest::owned_points(const CompressedForest& forest, Index root_index) const {
  const DiskRoot& r = roots[root_index];
  std::vector<Index> out;
  for (Index p : forest.points(r.node)) {
    if (owner[p] == root_index) out.push_back(p);
  }
  return out;
}

DiskForest split_roots_by_radius(const CompressedForest& forest) {
  const auto& inst = forest.instance();
  const std::size_t n_nodes = forest.size();
  DiskForest df;
  df.min_level.assign(n_nodes, INT_MAX);
  df.active_depth.assign(n_nodes, -1);
  df.root_of_node.assign(n_nodes, kNoNode);
  df.owner.assign(inst.size(), kNoNode);

  // Largest radius = smallest level; the ByRadius representative carries it.
  for (const auto& n : forest.nodes()) df.min_level[n.id] = disk_level(inst.radii[n.rep]);

  for (const auto& n : forest.nodes()) {
    const int m = df.min_level[n.id];
    if (m > forest.chain_end(n.id)) continue;
    const int depth = std::max(n.depth, m);
    df.active_depth[n.id] = depth;
    // The root square's parent is masked empty either inside this chain
    // (m > depth of the chain top) or at the parent's deepest square.
    const bool root = n.is_root() || m > n.depth ||
                      df.min_level[n.parent] > forest.chain_end(n.parent);
    if (root) {
      df.root_of_node[n.id] = static_cast<Index>(df.roots.size());
      df.roots.push_back({n.id, depth});
    }
  }
  // A disk enters at the square of its own level; it belongs to the tree of
  // the deepest root above that square. Preorder visits nested roots after
  // the roots enclosing them, so later writes are deeper.
  for (Index ri = 0; ri < df.roots.size(); ++ri) {
    const DiskRoot& r = df.roots[ri];
    for (Index p : forest.points(r.node)) {
      if (disk_level(inst.radii[p]) >= r.depth) df.owner[p] = ri;
    }
  }
  for ([[maybe_unused]] Index o : df.owner) assert(o != kNoNode);
  return df;
}

void write_forest_dump(std::ostream& os, const CompressedForest& forest) {
  const auto prec = os.precision(17);
  for (const auto& n : forest.nodes()) {
    const Square sq = forest.square(n.id);
    const Point c = sq.lower_left();
    os << n.id << ' ' << n.depth << ' ' << c.x << ' ' << c.y << ' ' << sq.side << ' ' << n.rep
       << ' ' << n.lo << ' ' << n.hi << ' '
       << (n.is_root() ? -1 : static_cast<long long>(n.parent)) << '\n';
  }
  os.precision(prec);
}

}  // namespace diskspan
