#include "wsp/wspd.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "wsp/error.hpp"

namespace wsp {

namespace {

void check_separation(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidSeparation, "s must be a positive finite real, got " +
                                                   std::to_string(s));
  }
}

void check_distinct(const SplitTree& t, NodeId v, NodeId w) {
  t.node(v);
  t.node(w);
  if (v == w) throw Error(ErrorCode::kInvalidNode, "pair needs two distinct nodes");
}

}  // namespace

bool is_well_separated(const SplitTree& t, NodeId v, NodeId w, double s) {
  check_distinct(t, v, w);
  check_separation(s);
  const Ball bv = enclosing_ball(t.node(v).rect);
  const Ball bw = enclosing_ball(t.node(w).rect);
  const double rho = std::max(bv.radius, bw.radius);
  const double gap = dist(bv.center(), bw.center()) - 2.0 * rho;
  return gap > 0.0 && gap >= s * rho;
}

WspdPair make_pair(const SplitTree& t, NodeId v, NodeId w) {
  const auto& nv = t.node(v);
  const auto& nw = t.node(w);
  WspdPair p;
  p.a = v;
  p.b = w;
  p.ball_a = enclosing_ball(nv.rect);
  p.ball_b = enclosing_ball(nw.rect);
  const double rho = std::max(p.ball_a.radius, p.ball_b.radius);
  p.ball_a.radius = rho;
  p.ball_b.radius = rho;
  p.gap = rect_min_distance(nv.rect, nw.rect);
  return p;
}

void find_pairs(const SplitTree& t, NodeId v, NodeId w, double s, std::vector<WspdPair>& out) {
  if (is_well_separated(t, v, w, s)) {
    out.push_back(make_pair(t, v, w));
    return;
  }
  const auto& nv = t.node(v);
  const auto& nw = t.node(w);
  // Two leaves always separate, so the node split here is never a leaf.
  if (lmax(nv.rect) <= lmax(nw.rect)) {
    if (nw.is_leaf()) throw Error(ErrorCode::kInvariantViolation, "asked to split a leaf");
    find_pairs(t, v, nw.left, s, out);
    find_pairs(t, v, nw.right, s, out);
  } else {
    if (nv.is_leaf()) throw Error(ErrorCode::kInvariantViolation, "asked to split a leaf");
    find_pairs(t, nv.left, w, s, out);
    find_pairs(t, nv.right, w, s, out);
  }
}

std::vector<WspdPair> find_pairs(const SplitTree& t, NodeId v, NodeId w, double s) {
  std::vector<WspdPair> out;
  find_pairs(t, v, w, s, out);
  return out;
}

Wspd compute_wspd(SplitTree tree, double s) {
  check_separation(s);
  Wspd result{std::move(tree), s, {}};
  for (const auto& u : result.tree.nodes()) {
    if (!u.is_leaf()) find_pairs(result.tree, u.left, u.right, s, result.pairs);
  }
  return result;
}

Wspd compute_wspd(const PointSet& ps, double s) {
  check_separation(s);
  return compute_wspd(build_split_tree(ps), s);
}

}  // namespace wsp
