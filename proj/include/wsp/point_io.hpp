#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wsp/geometry.hpp"

namespace wsp {

enum class PointFormat { kCsv, kJson };

/// JSON when the first non-blank character is '{', CSV otherwise.
PointFormat detect_point_format(std::string_view text);

/// CSV: one "x,y" per line, an optional non-numeric header line, blank lines
/// ignored. JSON: {"points": [[x, y], ...]}. Throws std::invalid_argument on
/// malformed text and wsp::Error on duplicate or non-finite points.
PointSet parse_points(std::string_view text);
PointSet parse_points(std::string_view text, PointFormat format);

std::string write_points(const PointSet& ps, PointFormat format);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

enum class Distribution { kUniform, kGrid, kClusters };

Distribution parse_distribution(std::string_view name);
std::string_view to_string(Distribution d);

/// Deterministic point generator. Uniform and cluster draws that collide
/// with an earlier point are redrawn. The grid fills a ceil(sqrt(n)) column
/// lattice row by row, spanning the bounds, and ignores the seed; it throws
/// Error(kGridOverflow) when the lattice cannot hold n distinct points.
PointSet generate(Distribution dist, std::size_t n, std::uint64_t seed,
                  const Rect& bounds = {0.0, 1.0, 0.0, 1.0});

}  // namespace wsp
