#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "wsp/geometry.hpp"
#include "wsp/wspd.hpp"

namespace wsp {

inline constexpr double kDefaultKClosestSeparation = 2.0;
inline constexpr double kDefaultAnnSeparation = 4.0;

/// Unordered point pair stored with i < j and its distance.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Orders by (d, i, j).
bool distance_order(const IndexPair& a, const IndexPair& b);

IndexPair make_index_pair(const PointSet& ps, std::size_t a, std::size_t b);

/// nn[p] is the index of the nearest other point; ties go to the smaller index.
using NeighborMap = std::vector<std::size_t>;

/// Scans the edges of the 2-spanner. Ties go to the smallest (i, j).
/// Throws kNeedTwoPoints.
IndexPair closest_pair(const PointSet& ps);

/// Intermediate quantities of the k-closest-pairs selection, kept for
/// inspection and testing.
struct KClosestResult {
  std::vector<IndexPair> pairs;  // k pairs sorted by (d, i, j)
  std::size_t ell = 0;           // pairs needed to cover k point pairs (1-based count)
  double r = 0.0;                // gap of pair number ell
  std::size_t ell_prime = 0;     // pairs with gap <= (1 + 4/s) r
  std::size_t candidate_count = 0;  // |L|
  std::size_t wspd_size = 0;
};

/// k closest pairs via a WSPD at separation s. Throws kNeedTwoPoints,
/// kInvalidK (k outside [1, n(n-1)/2]), kInvalidSeparation.
KClosestResult k_closest_pairs_detailed(const PointSet& ps, std::size_t k,
                                        double s = kDefaultKClosestSeparation);
std::vector<IndexPair> k_closest_pairs(const PointSet& ps, std::size_t k,
                                       double s = kDefaultKClosestSeparation);

/// Candidate set of every point: the union of the opposite sides of all
/// pairs whose other side is exactly that point. Sorted, deduplicated.
std::vector<std::vector<std::size_t>> nearest_neighbor_candidates(const Wspd& wspd);

/// Nearest neighbour of every point. Requires s > 2 (kSeparationTooSmall).
NeighborMap all_nearest_neighbors(const PointSet& ps, double s = kDefaultAnnSeparation);

}  // namespace wsp
