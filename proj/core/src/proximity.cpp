#include "diskspan/proximity.hpp"

#include <algorithm>
#include <iterator>

namespace diskspan {

namespace {

struct Weights {
  std::vector<Index> b;   // sorted
  std::vector<double> w;  // |b| x |b|, row-major
};

using InternalVisitor =
    std::function<void(const SeparatorNode&, const AugmentedGraph&, const std::vector<std::vector<double>>&)>;

Index position(const std::vector<Index>& sorted, Index v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  return (it != sorted.end() && *it == v) ? static_cast<Index>(it - sorted.begin()) : kNoIndex;
}

class Walker {
 public:
  Walker(const SpannerGraph& spanner, const SeparatorTree& tree, const InternalVisitor& visit)
      : adj_(spanner), tree_(tree), visit_(visit) {}

  void run() {
    if (!tree_.nodes.empty()) walk(0, Weights{});
  }

 private:
  Adjacency adj_;
  const SeparatorTree& tree_;
  const InternalVisitor& visit_;

  void walk(Index id, const Weights& wt) {
    const SeparatorNode& t = tree_.nodes[id];
    AugmentedGraph h;
    h.vertices = t.vertices;
    h.boundary = wt.b;
    std::vector<Edge> edges;
    for (Index i = 0; i < h.vertices.size(); ++i) {
      for (const Arc& a : adj_.neighbors(h.vertices[i])) {
        const Index j = position(h.vertices, a.to);
        if (j != kNoIndex && i < j) edges.push_back({i, j, a.weight, 0});
      }
    }
    const std::size_t nb = wt.b.size();
    for (std::size_t i = 0; i < nb; ++i) {
      for (std::size_t j = i + 1; j < nb; ++j) {
        const double w = wt.w[i * nb + j];
        if (w == kInfinity) continue;
        edges.push_back({position(h.vertices, wt.b[i]), position(h.vertices, wt.b[j]), w, 0});
        ++h.clique_edges;
      }
    }
    h.local = Adjacency(static_cast<Index>(h.vertices.size()), edges);

    std::vector<std::vector<double>> rows;
    rows.reserve(t.separator.size());
    for (Index s : t.separator) rows.push_back(dijkstra(h.local, position(h.vertices, s)));
    visit_(t, h, rows);
    if (t.is_leaf()) return;

    std::vector<Index> carried;
    std::set_union(t.separator.begin(), t.separator.end(), wt.b.begin(), wt.b.end(), std::back_inserter(carried));
    for (Index c : t.child) {
      const auto& cv = tree_.nodes[c].vertices;
      Weights next;
      std::set_intersection(carried.begin(), carried.end(), cv.begin(), cv.end(), std::back_inserter(next.b));
      const std::size_t m = next.b.size();
      next.w.assign(m * m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          const double w = lookup(t, h, rows, wt, next.b[i], next.b[j]);
          next.w[i * m + j] = w;
          next.w[j * m + i] = w;
        }
      }
      walk(c, next);
    }
  }

  static double lookup(const SeparatorNode& t, const AugmentedGraph& h, const std::vector<std::vector<double>>& rows,
                       const Weights& wt, Index a, Index b) {
    if (Index sa = position(t.separator, a); sa != kNoIndex) return rows[sa][h.local_index(b)];
    if (Index sb = position(t.separator, b); sb != kNoIndex) return rows[sb][h.local_index(a)];
    const Index ia = position(wt.b, a);
    const Index ib = position(wt.b, b);
    if (ia == kNoIndex || ib == kNoIndex)
      throw Error(ErrorCode::InductionOrderViolation, "no parent distance for a boundary pair");
    return wt.w[ia * wt.b.size() + ib];
  }
};

double finite_max(const std::vector<double>& d) {
  double m = 0.0;
  for (double x : d) {
    if (x != kInfinity) m = std::max(m, x);
  }
  return m;
}

}  // namespace

Index AugmentedGraph::local_index(Index v) const { return position(vertices, v); }

std::vector<double> AugmentedGraph::distances_from(Index v) const { return dijkstra(local, local_index(v)); }

std::vector<std::vector<Index>> boundary_sets(const SeparatorTree& tree) {
  std::vector<std::vector<Index>> b(tree.nodes.size());
  // Preorder: parents come first.
  for (const auto& t : tree.nodes) {
    if (t.parent == kNoIndex) continue;
    const auto& p = tree.nodes[t.parent];
    std::vector<Index> carried;
    std::set_union(p.separator.begin(), p.separator.end(), b[p.id].begin(), b[p.id].end(),
                   std::back_inserter(carried));
    std::set_intersection(carried.begin(), carried.end(), t.vertices.begin(), t.vertices.end(),
                          std::back_inserter(b[t.id]));
  }
  return b;
}

void for_each_augmented_graph(const SpannerGraph& spanner, const SeparatorTree& tree, const AugmentedVisitor& visit) {
  const InternalVisitor inner = [&](const SeparatorNode& t, const AugmentedGraph& h, const auto&) { visit(t, h); };
  Walker(spanner, tree, inner).run();
}

DiameterEstimate estimate_diameter(const SpannerGraph& spanner, const SeparatorTree& tree, bool per_component) {
  if (!per_component && spanner.n > 0) {
    const auto comp = connected_components(Adjacency(spanner));
    if (std::any_of(comp.begin(), comp.end(), [](Index c) { return c != 0; }))
      throw Error(ErrorCode::DisconnectedGraph, "spanner is disconnected");
  }
  DiameterEstimate out;
  out.node_estimate.assign(tree.nodes.size(), 0.0);
  const InternalVisitor visit = [&](const SeparatorNode& t, const AugmentedGraph& h,
                                    const std::vector<std::vector<double>>& rows) {
    double est = 0.0;
    if (t.is_leaf() && t.separator.empty()) {
      for (Index i = 0; i < h.vertices.size(); ++i) est = std::max(est, finite_max(dijkstra(h.local, i)));
    } else {
      for (const auto& r : rows) est = std::max(est, finite_max(r));
    }
    if (!t.is_leaf() && !rows.empty()) {
      Index z = kNoIndex;
      int z_side = 0;
      double best = -1.0;
      for (int side = 0; side < 2; ++side) {
        for (Index v : tree.nodes[t.child[side]].vertices) {
          if (position(t.separator, v) != kNoIndex) continue;
          const Index lv = h.local_index(v);
          double clo = kInfinity;
          for (const auto& r : rows) clo = std::min(clo, r[lv]);
          if (clo == kInfinity) continue;
          if (clo > best || (clo == best && v < z)) {
            best = clo;
            z = v;
            z_side = side;
          }
        }
      }
      if (z != kNoIndex) {
        const auto dz = h.distances_from(z);
        for (Index w : tree.nodes[t.child[1 - z_side]].vertices) {
          const double d = dz[h.local_index(w)];
          if (d != kInfinity) est = std::max(est, d);
        }
      }
    }
    out.node_estimate[t.id] = est;
    out.dia = std::max(out.dia, est);
  };
  Walker(spanner, tree, visit).run();
  return out;
}

}  // namespace diskspan
