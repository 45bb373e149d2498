#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wsp/geometry.hpp"
#include "wsp/proximity.hpp"
#include "wsp/spanner.hpp"
#include "wsp/wspd.hpp"

// Brute-force reference implementations. These only rely on the geometry
// primitives and the plain data types of the other modules; none of the
// algorithms they check are called from here.
namespace wsp::oracle {

IndexPair brute_closest_pair(const PointSet& ps);

/// All pairs sorted by (d, i, j), first k.
std::vector<IndexPair> brute_k_closest(const PointSet& ps, std::size_t k);

NeighborMap brute_ann(const PointSet& ps);

/// O(n^2) array Prim over the complete graph, same tie rule as prim_mst.
Tree brute_emst(const PointSet& ps);

/// Minimum spanning-tree weight of `g` by enumerating every labelled tree on
/// its vertices (Pruefer sequences) and keeping those whose edges all exist
/// in `g`. n^(n-2) candidates, so only use for n <= 9.
/// Returns +inf when `g` is disconnected.
double exhaustive_mst_weight(const Graph& g);

struct WspdReport {
  std::size_t n = 0;
  /// coverage[i * n + j] for i < j: number of pairs separating points i, j.
  std::vector<int> coverage;
  /// Separation predicate recomputed from the raw point sets, per pair.
  std::vector<bool> separated;
  std::size_t uncovered = 0;      // point pairs with count 0
  std::size_t overcovered = 0;    // point pairs with count > 1
  std::size_t not_separated = 0;  // pairs failing the predicate
  std::size_t overlapping = 0;    // pairs whose sides share a point

  int count(std::size_t i, std::size_t j) const;
  bool valid() const {
    return uncovered == 0 && overcovered == 0 && not_separated == 0 && overlapping == 0;
  }
};

WspdReport check_wspd(const SplitTree& tree, double s, std::span<const WspdPair> pairs);
WspdReport check_wspd(const Wspd& wspd);

}  // namespace wsp::oracle
