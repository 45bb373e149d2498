#include "wsp/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "wsp/error.hpp"
#include "wsp/spanner.hpp"

namespace wsp {

namespace {

void need_two(const PointSet& ps) {
  if (ps.size() < 2) {
    throw Error(ErrorCode::kNeedTwoPoints, "need at least two points, got " +
                                               std::to_string(ps.size()));
  }
}

}  // namespace

bool distance_order(const IndexPair& a, const IndexPair& b) {
  return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j);
}

IndexPair make_index_pair(const PointSet& ps, std::size_t a, std::size_t b) {
  const std::size_t i = std::min(a, b);
  const std::size_t j = std::max(a, b);
  return {i, j, dist(ps[i], ps[j])};
}

IndexPair closest_pair(const PointSet& ps) {
  need_two(ps);
  const Graph spanner = build_t_spanner(ps, 2.0);
  const auto& edges = spanner.edges();
  IndexPair best = make_index_pair(ps, edges.front().u, edges.front().v);
  for (const auto& e : edges) {
    const IndexPair cand = make_index_pair(ps, e.u, e.v);
    if (distance_order(cand, best)) best = cand;
  }
  return best;
}

KClosestResult k_closest_pairs_detailed(const PointSet& ps, std::size_t k, double s) {
  need_two(ps);
  const std::size_t n = ps.size();
  const std::size_t total = n * (n - 1) / 2;
  if (k < 1 || k > total) {
    throw Error(ErrorCode::kInvalidK, "k = " + std::to_string(k) + " outside [1, " +
                                          std::to_string(total) + "]");
  }

  const Wspd wspd = compute_wspd(ps, s);
  const auto& tree = wspd.tree;
  const std::size_t m = wspd.size();

  // Renumber pairs by nondecreasing gap; equal gaps keep emission order.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return wspd.pairs[a].gap < wspd.pairs[b].gap;
  });
  auto gap_at = [&](std::size_t rank) { return wspd.pairs[order[rank]].gap; };
  auto pair_count_at = [&](std::size_t rank) {
    const auto& p = wspd.pairs[order[rank]];
    return tree.node(p.a).size() * tree.node(p.b).size();
  };

  KClosestResult result;
  result.wspd_size = m;

  std::size_t covered = 0;
  while (result.ell < m && covered < k) covered += pair_count_at(result.ell++);
  if (covered < k) throw Error(ErrorCode::kInvariantViolation, "WSPD covers fewer than k pairs");

  result.r = gap_at(result.ell - 1);
  const double limit = (1.0 + 4.0 / s) * result.r;
  for (std::size_t rank = 0; rank < m; ++rank) {
    if (gap_at(rank) <= limit) ++result.ell_prime;
  }

  // Gaps are sorted, so the first ell_prime ranks are exactly those within
  // the limit.
  std::vector<IndexPair> candidates;
  for (std::size_t rank = 0; rank < result.ell_prime; ++rank) {
    const auto& p = wspd.pairs[order[rank]];
    for (std::size_t a : tree.node(p.a).point_indices) {
      for (std::size_t b : tree.node(p.b).point_indices) candidates.push_back(make_index_pair(ps, a, b));
    }
  }
  result.candidate_count = candidates.size();
  if (result.ell_prime < result.ell || result.candidate_count < k) {
    throw Error(ErrorCode::kInvariantViolation,
                "k-closest selection: ell' = " + std::to_string(result.ell_prime) +
                    ", ell = " + std::to_string(result.ell) +
                    ", |L| = " + std::to_string(result.candidate_count));
  }

  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                    candidates.end(), distance_order);
  candidates.resize(k);
  result.pairs = std::move(candidates);
  return result;
}

std::vector<IndexPair> k_closest_pairs(const PointSet& ps, std::size_t k, double s) {
  return k_closest_pairs_detailed(ps, k, s).pairs;
}

std::vector<std::vector<std::size_t>> nearest_neighbor_candidates(const Wspd& wspd) {
  const auto& tree = wspd.tree;
  std::vector<std::vector<std::size_t>> cand(tree.points().size());
  auto collect = [&](NodeId single, NodeId other) {
    const auto& ns = tree.node(single);
    if (!ns.is_leaf()) return;
    const auto& pts = tree.node(other).point_indices;
    auto& dst = cand[*ns.leaf_point];
    dst.insert(dst.end(), pts.begin(), pts.end());
  };
  for (const auto& p : wspd.pairs) {
    collect(p.a, p.b);
    collect(p.b, p.a);
  }
  for (auto& c : cand) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return cand;
}

NeighborMap all_nearest_neighbors(const PointSet& ps, double s) {
  need_two(ps);
  if (!(s > 2.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kSeparationTooSmall, "s must exceed 2, got " + std::to_string(s));
  }
  const auto candidates = nearest_neighbor_candidates(compute_wspd(ps, s));

  NeighborMap nn(ps.size());
  for (std::size_t p = 0; p < ps.size(); ++p) {
    const auto& cand = candidates[p];
    if (cand.empty()) throw Error(ErrorCode::kInvariantViolation, "empty candidate set");
    // Candidates are sorted by index, so strict < keeps the smallest on ties.
    std::size_t best = cand.front();
    double best_d = dist(ps[p], ps[best]);
    for (std::size_t q : cand) {
      const double d = dist(ps[p], ps[q]);
      if (d < best_d) {
        best = q;
        best_d = d;
      }
    }
    nn[p] = best;
  }
  return nn;
}

}  // namespace wsp
