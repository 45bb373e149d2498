#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "wsp/geometry.hpp"

namespace wsp::test {

// Uniform points in [0, 100)^2, distinct by construction.
inline PointSet random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  std::set<std::pair<double, double>> seen;
  std::vector<Point2> pts;
  while (pts.size() < n) {
    const Point2 p{coord(rng), coord(rng)};
    if (seen.emplace(p.x, p.y).second) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

// Small integer lattice coordinates: lots of exact ties in distances.
inline PointSet random_lattice_points(std::size_t n, std::uint64_t seed, int side = 12) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, side - 1);
  std::set<std::pair<int, int>> seen;
  std::vector<Point2> pts;
  while (pts.size() < n) {
    const int x = coord(rng);
    const int y = coord(rng);
    if (seen.emplace(x, y).second) pts.push_back({double(x), double(y)});
  }
  return PointSet(std::move(pts));
}

}  // namespace wsp::test
