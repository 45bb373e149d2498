#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wsp/geometry.hpp"
#include "wsp/wspd.hpp"

namespace wsp {

struct Edge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Euclidean graph on the points of a PointSet. Edge weights are always the
/// distance between the endpoints; edges keep insertion order.
class Graph {
 public:
  explicit Graph(const PointSet& ps);

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const PointSet& points() const { return points_; }

  /// Adds {i, j}. Returns false if the edge is already present.
  /// Throws kInvalidNode for out-of-range or equal endpoints.
  bool add_edge(std::size_t i, std::size_t j);
  bool has_edge(std::size_t i, std::size_t j) const;

  /// adjacency()[v] lists (neighbour, weight).
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency() const;
  double total_weight() const;
  bool is_connected() const;

 private:
  PointSet points_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

/// A spanning tree: n - 1 edges connecting all n vertices.
class Tree {
 public:
  /// Throws kInvariantViolation unless `g` is a spanning tree.
  explicit Tree(Graph g);

  const Graph& graph() const { return graph_; }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  double weight() const { return weight_; }

 private:
  Graph graph_;
  double weight_ = 0.0;
};

/// s = 4(t + 1)/(t - 1). Throws kInvalidStretchFactor unless t > 1.
double separation_for_stretch(double t);

/// One edge per pair, joining the smallest point index of each side.
/// Pairs inducing the same edge are merged.
Graph build_t_spanner(const Wspd& wspd);
Graph build_t_spanner(const PointSet& ps, double t);

/// Maximum ratio of shortest-path length to Euclidean distance over all
/// point pairs. Throws kNeedTwoPoints, kDisconnectedGraph.
double dilation(const Graph& g);
double dilation(const PointSet& ps, const Graph& g);

/// Single-source shortest path lengths (Dijkstra).
std::vector<double> shortest_paths(const Graph& g, std::size_t source);

/// Prim from vertex 0. Among equal-weight candidates the edge with the
/// lexicographically smallest (min endpoint, max endpoint) wins.
/// Throws kEmptyPointSet, kDisconnectedGraph.
Tree prim_mst(const Graph& g);

/// prim_mst(build_t_spanner(ps, t)).
Tree approx_mst(const PointSet& ps, double t);

}  // namespace wsp
