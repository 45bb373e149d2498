#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wsp/geometry.hpp"

namespace wsp {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

struct SplitTreeNode {
  NodeId id = kNoNode;
  int depth = 0;
  Rect rect;                               // bounding box of point_indices
  std::vector<std::size_t> point_indices;  // sorted
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  std::optional<std::size_t> leaf_point;

  bool is_leaf() const { return leaf_point.has_value(); }
  std::size_t size() const { return point_indices.size(); }
  /// Smallest point index in the subtree.
  std::size_t representative() const { return point_indices.front(); }
};

/// Split tree over a point set, built by repeatedly halving the longer side
/// of the current bounding box. Nodes live in an arena and are numbered in
/// preorder (node, left subtree, right subtree), so the root is node 0.
class SplitTree {
 public:
  const PointSet& points() const { return points_; }
  NodeId root() const { return 0; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<SplitTreeNode>& nodes() const { return nodes_; }

  /// Throws Error(kInvalidNode) for an out-of-range handle.
  const SplitTreeNode& node(NodeId id) const;

  friend SplitTree build_split_tree(const PointSet& ps);

 private:
  NodeId build(std::vector<std::size_t> indices, int depth);

  PointSet points_;
  std::vector<SplitTreeNode> nodes_;
};

/// Throws Error(kEmptyPointSet) for an empty set.
SplitTree build_split_tree(const PointSet& ps);

double node_lmax(const SplitTree& t, NodeId v);

}  // namespace wsp
