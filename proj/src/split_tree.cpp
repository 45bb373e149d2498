#include "wsp/split_tree.hpp"

#include <string>
#include <utility>

#include "wsp/error.hpp"

namespace wsp {

const SplitTreeNode& SplitTree::node(NodeId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
    throw Error(ErrorCode::kInvalidNode, "node " + std::to_string(id) + " not in tree of " +
                                             std::to_string(nodes_.size()) + " nodes");
  }
  return nodes_[static_cast<std::size_t>(id)];
}

NodeId SplitTree::build(std::vector<std::size_t> indices, int depth) {
  const auto id = static_cast<NodeId>(nodes_.size());
  {
    SplitTreeNode n;
    n.id = id;
    n.depth = depth;
    n.rect = bounding_box(points_, indices);
    nodes_.push_back(std::move(n));
  }
  if (indices.size() == 1) {
    nodes_[id].leaf_point = indices.front();
    nodes_[id].point_indices = std::move(indices);
    return id;
  }

  const Rect r = nodes_[id].rect;
  // Square boxes split along x.
  const bool split_x = r.width() >= r.height();
  const double lo = split_x ? r.xmin : r.ymin;
  const double hi = split_x ? r.xmax : r.ymax;
  double mid = lo / 2 + hi / 2;
  // When lo and hi are adjacent doubles the midpoint can round up to hi,
  // which would leave the right half empty.
  if (mid >= hi) mid = lo;

  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t i : indices) {
    const double c = split_x ? points_[i].x : points_[i].y;
    (c <= mid ? left : right).push_back(i);
  }
  if (left.empty() || right.empty()) {
    throw Error(ErrorCode::kInvariantViolation, "split produced an empty half");
  }

  nodes_[id].point_indices = std::move(indices);
  const NodeId l = build(std::move(left), depth + 1);
  const NodeId rt = build(std::move(right), depth + 1);
  nodes_[id].left = l;
  nodes_[id].right = rt;
  return id;
}

SplitTree build_split_tree(const PointSet& ps) {
  if (ps.empty()) throw Error(ErrorCode::kEmptyPointSet, "cannot build a split tree on no points");
  SplitTree t;
  t.points_ = ps;
  t.nodes_.reserve(2 * ps.size() - 1);
  std::vector<std::size_t> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  t.build(std::move(all), 0);
  return t;
}

double node_lmax(const SplitTree& t, NodeId v) { return lmax(t.node(v).rect); }

}  // namespace wsp
