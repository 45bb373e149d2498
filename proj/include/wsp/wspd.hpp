#pragma once

#include <cstddef>
#include <vector>

#include "wsp/geometry.hpp"
#include "wsp/split_tree.hpp"

namespace wsp {

/// One well-separated pair {A, B}, referenced through split-tree nodes.
struct WspdPair {
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  Ball ball_a;  // congruent witness balls: both carry the larger radius
  Ball ball_b;
  double gap = 0.0;  // rect_min_distance(R(a), R(b))

  friend bool operator==(const WspdPair&, const WspdPair&) = default;
};

/// Well-separated pair decomposition of a point set. Owns its split tree.
struct Wspd {
  SplitTree tree;
  double s = 0.0;
  std::vector<WspdPair> pairs;

  std::size_t size() const { return pairs.size(); }
};

/// Separation test on the canonical witness: the enclosing balls of the two
/// bounding boxes, the smaller one inflated to the larger radius rho. True
/// iff the balls are disjoint and their distance is at least s * rho.
bool is_well_separated(const SplitTree& t, NodeId v, NodeId w, double s);

/// Builds the pair record for {v, w}, including witness balls and gap.
WspdPair make_pair(const SplitTree& t, NodeId v, NodeId w);

/// Decomposes S_v x S_w: emits {v, w} when well separated, otherwise splits
/// the node with the larger L_max (w on ties) and recurses on its children,
/// left before right. Pairs are appended to `out`.
void find_pairs(const SplitTree& t, NodeId v, NodeId w, double s, std::vector<WspdPair>& out);
std::vector<WspdPair> find_pairs(const SplitTree& t, NodeId v, NodeId w, double s);

/// Builds the split tree and runs find_pairs on the children of every
/// internal node, in node order. Throws kEmptyPointSet, kInvalidSeparation.
Wspd compute_wspd(const PointSet& ps, double s);
Wspd compute_wspd(SplitTree tree, double s);

}  // namespace wsp
