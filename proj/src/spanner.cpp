#include "wsp/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "wsp/error.hpp"

namespace wsp {

Graph::Graph(const PointSet& ps) : points_(ps), neighbours_(ps.size()) {}

bool Graph::add_edge(std::size_t i, std::size_t j) {
  const std::size_t n = points_.size();
  if (i >= n || j >= n || i == j) {
    throw Error(ErrorCode::kInvalidNode, "bad edge {" + std::to_string(i) + ", " +
                                             std::to_string(j) + "} on " + std::to_string(n) +
                                             " vertices");
  }
  if (has_edge(i, j)) return false;
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  edges_.push_back({lo, hi, dist(points_[lo], points_[hi])});
  neighbours_[lo].push_back(hi);
  neighbours_[hi].push_back(lo);
  return true;
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  if (i >= neighbours_.size()) return false;
  const auto& ni = neighbours_[i];
  return std::find(ni.begin(), ni.end(), j) != ni.end();
}

std::vector<std::vector<std::pair<std::size_t, double>>> Graph::adjacency() const {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(points_.size());
  for (const auto& e : edges_) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  return adj;
}

double Graph::total_weight() const {
  double w = 0.0;
  for (const auto& e : edges_) w += e.weight;
  return w;
}

bool Graph::is_connected() const {
  const std::size_t n = points_.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : neighbours_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Tree::Tree(Graph g) : graph_(std::move(g)), weight_(graph_.total_weight()) {
  const std::size_t n = graph_.vertex_count();
  if (n == 0 || graph_.edge_count() != n - 1 || !graph_.is_connected()) {
    throw Error(ErrorCode::kInvariantViolation, "graph is not a spanning tree");
  }
}

double separation_for_stretch(double t) {
  if (!(t > 1.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::kInvalidStretchFactor, "t must be > 1, got " + std::to_string(t));
  }
  return 4.0 * (t + 1.0) / (t - 1.0);
}

Graph build_t_spanner(const Wspd& wspd) {
  const auto& tree = wspd.tree;
  Graph g(tree.points());
  for (const auto& pair : wspd.pairs) {
    g.add_edge(tree.node(pair.a).representative(), tree.node(pair.b).representative());
  }
  return g;
}

Graph build_t_spanner(const PointSet& ps, double t) {
  const double s = separation_for_stretch(t);
  return build_t_spanner(compute_wspd(ps, s));
}

std::vector<double> shortest_paths(const Graph& g, std::size_t source) {
  const auto adj = g.adjacency();
  std::vector<double> d(g.vertex_count(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  d[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du > d[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      if (du + w < d[v]) {
        d[v] = du + w;
        heap.emplace(d[v], v);
      }
    }
  }
  return d;
}

double dilation(const Graph& g) {
  const auto& ps = g.points();
  const std::size_t n = ps.size();
  if (n < 2) throw Error(ErrorCode::kNeedTwoPoints, "dilation needs at least two points");
  double worst = 1.0;
  for (std::size_t src = 0; src + 1 < n; ++src) {
    const auto d = shortest_paths(g, src);
    for (std::size_t q = src + 1; q < n; ++q) {
      if (!std::isfinite(d[q])) {
        throw Error(ErrorCode::kDisconnectedGraph,
                    "no path between " + std::to_string(src) + " and " + std::to_string(q));
      }
      worst = std::max(worst, d[q] / dist(ps[src], ps[q]));
    }
  }
  return worst;
}

double dilation(const PointSet& ps, const Graph& g) {
  if (!(ps == g.points())) {
    throw Error(ErrorCode::kInvariantViolation, "graph was built on a different point set");
  }
  return dilation(g);
}

Tree prim_mst(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::kEmptyPointSet, "spanning tree of no vertices");
  const auto adj = g.adjacency();

  // (weight, min endpoint, max endpoint, vertex reached)
  using Candidate = std::tuple<double, std::size_t, std::size_t, std::size_t>;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  std::vector<bool> in_tree(n, false);
  Graph tree(g.points());

  auto absorb = [&](std::size_t v) {
    in_tree[v] = true;
    for (const auto& [w, weight] : adj[v]) {
      if (!in_tree[w]) heap.emplace(weight, std::min(v, w), std::max(v, w), w);
    }
  };
  absorb(0);
  while (!heap.empty()) {
    const auto [weight, lo, hi, v] = heap.top();
    heap.pop();
    if (in_tree[v]) continue;
    tree.add_edge(lo, hi);
    absorb(v);
  }
  if (tree.edge_count() != n - 1) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph does not span all vertices");
  }
  return Tree(std::move(tree));
}

Tree approx_mst(const PointSet& ps, double t) { return prim_mst(build_t_spanner(ps, t)); }

}  // namespace wsp
