#include "diskspan/separator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <sstream>

namespace diskspan {

namespace {

double coord(const Point& p, Axis axis) { return axis == Axis::Vertical ? p.x : p.y; }

Axis flip(Axis a) { return a == Axis::Vertical ? Axis::Horizontal : Axis::Vertical; }

bool degenerate(const Instance& inst, std::span<const Index> vs, Axis axis) {
  for (Index v : vs) {
    if (coord(inst.points[v], axis) != coord(inst.points[vs.front()], axis)) return false;
  }
  return true;
}

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::SeparatorInvariantViolation, what);
}

class Builder {
 public:
  Builder(const SpannerGraph& g, const Instance& inst, const Epsilon& eps, std::size_t leaf_max)
      : inst_(inst), eps_(eps), adj_(g), in_v_(g.n, kNoIndex), in_x_(g.n, kNoIndex) {
    tree_.leaf_max = leaf_max;
    for (const Edge& e : g.edges) {
      if (e.depth_tag >= 0) levels_.push_back(e.depth_tag);
    }
    std::sort(levels_.begin(), levels_.end());
    levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
    if (levels_.empty()) levels_.push_back(0);
  }

  SeparatorTree run() {
    std::vector<Index> all(inst_.size());
    for (Index i = 0; i < all.size(); ++i) all[i] = i;
    build(std::move(all), kNoIndex);
    return std::move(tree_);
  }

 private:
  const Instance& inst_;
  const Epsilon& eps_;
  Adjacency adj_;
  std::vector<int> levels_;
  std::vector<Index> in_v_;  // stamps: node id currently marking membership
  std::vector<Index> in_x_;
  Index stamp_ = 0;
  SeparatorTree tree_;

  Index build(std::vector<Index> vs, Index parent) {
    const auto id = static_cast<Index>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    tree_.nodes[id].id = id;
    tree_.nodes[id].parent = parent;
    std::sort(vs.begin(), vs.end());
    if (vs.size() > tree_.leaf_max) {
      std::vector<Index> sep;
      std::array<std::vector<Index>, 2> parts;
      std::vector<LineCut> cuts;
      if (split(vs, sep, parts, cuts)) {
        tree_.nodes[id].separator = std::move(sep);
        tree_.nodes[id].cuts = std::move(cuts);
        tree_.nodes[id].vertices = std::move(vs);
        const Index c0 = build(std::move(parts[0]), id);
        tree_.nodes[id].child[0] = c0;
        const Index c1 = build(std::move(parts[1]), id);
        tree_.nodes[id].child[1] = c1;
        return id;
      }
      tree_.nodes[id].separator = vs;
      tree_.nodes[id].cuts = std::move(cuts);
    }
    tree_.nodes[id].vertices = std::move(vs);
    return id;
  }

  // Cuts V into pieces until none holds 2/3 of it, then separates a union of
  // pieces of size in [N/3, 2N/3] by its vertices with outside neighbors.
  bool split(const std::vector<Index>& vs, std::vector<Index>& sep, std::array<std::vector<Index>, 2>& parts,
             std::vector<LineCut>& cuts) {
    const std::size_t n = vs.size();
    std::vector<std::vector<Index>> pieces{vs};
    Axis axis = Axis::Vertical;
    for (std::size_t iter = 0;; ++iter) {
      auto active = std::find_if(pieces.begin(), pieces.end(), [&](const auto& p) { return 3 * p.size() >= 2 * n; });
      if (active == pieces.end()) break;
      std::vector<Index> piece = std::move(*active);
      pieces.erase(active);
      if (degenerate(inst_, piece, axis)) axis = flip(axis);
      const int level = levels_[std::min(iter, levels_.size() - 1)];
      const DoubleLine dl = double_line_separator(inst_, piece, axis, level, eps_, n);
      cuts.push_back({axis, level, dl});
      const double lo = std::min(dl.l1, dl.l2);
      const double hi = std::max(dl.l1, dl.l2);
      std::vector<Index> out[3];
      for (Index v : piece) {
        const double c = coord(inst_.points[v], axis);
        out[c < lo ? 0 : (c >= hi ? 2 : 1)].push_back(v);
      }
      if (std::max({out[0].size(), out[1].size(), out[2].size()}) == piece.size()) {
        // No progress from the lines: halve the piece by coordinate.
        std::sort(piece.begin(), piece.end(), [&](Index a, Index b) {
          const double ca = coord(inst_.points[a], axis);
          const double cb = coord(inst_.points[b], axis);
          return ca != cb ? ca < cb : a < b;
        });
        const auto half = piece.begin() + static_cast<std::ptrdiff_t>(piece.size() / 2);
        out[0].assign(piece.begin(), half);
        out[1].clear();
        out[2].assign(half, piece.end());
      }
      for (auto& o : out) {
        if (!o.empty()) pieces.push_back(std::move(o));
      }
      axis = flip(axis);
    }

    std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    ++stamp_;
    for (Index v : vs) in_v_[v] = stamp_;
    std::size_t x_size = 0;
    std::vector<Index> x;
    for (const auto& p : pieces) {
      if (3 * x_size >= n) break;
      for (Index v : p) {
        in_x_[v] = stamp_;
        x.push_back(v);
      }
      x_size += p.size();
    }
    auto inside_v = [&](Index v) { return in_v_[v] == stamp_; };
    auto inside_x = [&](Index v) { return in_x_[v] == stamp_; };

    sep.clear();
    for (Index v : x) {
      for (const Arc& a : adj_.neighbors(v)) {
        if (inside_v(a.to) && !inside_x(a.to)) {
          sep.push_back(v);
          break;
        }
      }
    }
    std::sort(sep.begin(), sep.end());
    auto in_sep = [&](Index v) { return std::binary_search(sep.begin(), sep.end(), v); };

    parts[0].clear();
    parts[1].clear();
    for (Index v : vs) {
      if (inside_x(v) && !in_sep(v)) parts[0].push_back(v);
      if (!inside_x(v)) parts[1].push_back(v);
    }
    for (Index s : sep) {
      bool near[2] = {false, false};
      for (const Arc& a : adj_.neighbors(s)) {
        if (!inside_v(a.to) || in_sep(a.to)) continue;
        near[inside_x(a.to) ? 0 : 1] = true;
      }
      for (int side = 0; side < 2; ++side) {
        if (near[side]) parts[side].push_back(s);
      }
    }
    for (auto& p : parts) {
      if (p.empty() || p.size() >= n) return false;
    }
    return true;
  }
};

}  // namespace

DoubleLine double_line_separator(const Instance& inst, std::span<const Index> vertices, Axis axis, int level,
                                 const Epsilon& eps, std::size_t n_total) {
  std::vector<double> c;
  c.reserve(vertices.size());
  for (Index v : vertices) c.push_back(coord(inst.points[v], axis));
  std::sort(c.begin(), c.end());
  if (c.empty() || c.front() == c.back()) throw Error(ErrorCode::DegenerateAxis, "fewer than 2 distinct coordinates");

  const auto m = static_cast<std::ptrdiff_t>(c.size());
  const std::ptrdiff_t h = m / 2;
  const double inv = static_cast<double>(eps.inv());
  const auto b = static_cast<std::ptrdiff_t>(std::ceil(std::sqrt(static_cast<double>(n_total)) * inv * std::sqrt(inv)));
  const double wide = std::ldexp(1.0, -level + 2);
  const double offset = std::ldexp(1.0, -level + 1);

  DoubleLine dl;
  dl.block = static_cast<std::size_t>(b);
  // Blocks of b gaps walking out from the median pair (c[h-1], c[h]); the
  // first block on each side holds both, neighbors share an end point.
  for (std::ptrdiff_t hi = h; hi > 0; hi -= b) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, hi - b);
    if (c[hi] - c[lo] >= wide) {
      dl.l1 = c[hi] - offset;
      dl.l1_found = true;
      break;
    }
  }
  for (std::ptrdiff_t lo = h - 1; lo < m - 1; lo += b) {
    const std::ptrdiff_t hi = std::min(m - 1, lo + b);
    if (c[hi] - c[lo] >= wide) {
      dl.l2 = c[lo] + offset;
      dl.l2_found = true;
      break;
    }
  }
  return dl;
}

void check_edge_lengths(const SpannerGraph& spanner) {
  for (const Edge& e : spanner.edges) {
    if (e.weight > std::ldexp(1.0, -std::max(e.depth_tag, 0) + 1)) {
      std::ostringstream os;
      os << "edge " << e.u << '-' << e.v << " with tag " << e.depth_tag << " has length " << e.weight;
      violation(os.str());
    }
  }
}

SeparatorTree build_separator_decomposition(const SpannerGraph& spanner, const Instance& inst, const Epsilon& eps,
                                            std::size_t leaf_max) {
  return Builder(spanner, inst, eps, leaf_max).run();
}

SeparatorReport verify_separator(const SeparatorTree& tree, const SpannerGraph& spanner, const Epsilon& eps) {
  const Adjacency adj(spanner);
  SeparatorReport rep;
  rep.nodes = tree.nodes.size();
  std::vector<int> side(spanner.n, -1);
  const double eps15 = std::pow(eps.value(), 1.5);
  for (const auto& t : tree.nodes) {
    const std::size_t nv = t.vertices.size();
    const std::size_t ns = t.separator.size();
    rep.max_separator = std::max(rep.max_separator, ns);
    if (t.id == 0) rep.root_separator = ns;
    if (nv > 0) rep.max_ratio = std::max(rep.max_ratio, static_cast<double>(ns) * eps15 / std::sqrt(static_cast<double>(nv)));
    if (!std::includes(t.vertices.begin(), t.vertices.end(), t.separator.begin(), t.separator.end()))
      violation("node " + std::to_string(t.id) + ": separator outside V");
    if (t.is_leaf()) {
      if (nv > tree.leaf_max && t.separator != t.vertices)
        violation("leaf " + std::to_string(t.id) + " exceeds leaf size");
      continue;
    }
    for (int i = 0; i < 2; ++i) {
      const auto& c = tree.nodes[t.child[i]];
      if (!std::includes(t.vertices.begin(), t.vertices.end(), c.vertices.begin(), c.vertices.end()))
        violation("node " + std::to_string(c.id) + " has vertices outside its parent");
      if (3 * c.vertices.size() > 2 * nv + 3 * ns)
        violation("node " + std::to_string(c.id) + " breaks the 2/3 balance");
    }
    for (int i = 0; i < 2; ++i) {
      for (Index v : tree.nodes[t.child[i]].vertices) side[v] = i;
    }
    for (Index s : t.separator) side[s] = -1;
    for (Index v : tree.nodes[t.child[0]].vertices) {
      if (side[v] != 0) continue;
      for (const Arc& a : adj.neighbors(v)) {
        if (side[a.to] == 1) {
          violation("node " + std::to_string(t.id) + ": edge " + std::to_string(std::min(v, a.to)) + '-' +
                    std::to_string(std::max(v, a.to)) + " crosses the separator");
        }
      }
    }
    for (int i = 0; i < 2; ++i) {
      for (Index v : tree.nodes[t.child[i]].vertices) side[v] = -1;
    }
  }
  return rep;
}

void write_separator_dump(std::ostream& os, const SeparatorTree& tree) {
  std::size_t total_v = 0;
  std::size_t total_s = 0;
  for (const auto& t : tree.nodes) {
    total_v += t.vertices.size();
    total_s += t.separator.size();
  }
  os << tree.nodes.size() << ' ' << total_v << ' ' << total_s << '\n';
  std::size_t voff = 0;
  std::size_t soff = 0;
  for (const auto& t : tree.nodes) {
    os << t.id << ' ' << (t.parent == kNoIndex ? -1 : static_cast<long long>(t.parent)) << ' ' << t.vertices.size()
       << ' ' << t.separator.size() << ' ' << voff << ' ' << soff << '\n';
    voff += t.vertices.size();
    soff += t.separator.size();
  }
  auto write_list = [&](auto member) {
    bool first = true;
    for (const auto& t : tree.nodes) {
      for (Index v : t.*member) {
        if (!first) os << ' ';
        os << v;
        first = false;
      }
    }
    os << '\n';
  };
  write_list(&SeparatorNode::vertices);
  write_list(&SeparatorNode::separator);
}

}  // namespace diskspan
