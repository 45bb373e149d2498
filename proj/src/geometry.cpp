#include "wsp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "wsp/error.hpp"

namespace wsp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyPointSet: return "EmptyPointSet";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kNonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::kInvalidNode: return "InvalidNode";
    case ErrorCode::kInvalidSeparation: return "InvalidSeparation";
    case ErrorCode::kInvalidStretchFactor: return "InvalidStretchFactor";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kNeedTwoPoints: return "NeedTwoPoints";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kSeparationTooSmall: return "SeparationTooSmall";
    case ErrorCode::kGridOverflow: return "GridOverflow";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Point2 make_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::kNonFiniteCoordinate,
                "(" + std::to_string(x) + ", " + std::to_string(y) + ")");
  }
  return {x, y};
}

PointSet::PointSet(std::vector<Point2> points) : points_(std::move(points)) {
  std::set<std::pair<double, double>> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    make_point(p.x, p.y);
    // -0.0 and 0.0 compare equal here, which is what we want.
    if (!seen.emplace(p.x, p.y).second) {
      throw Error(ErrorCode::kDuplicatePoint,
                  "point " + std::to_string(i) + " repeats an earlier coordinate");
    }
  }
}

double dist(const Point2& p, const Point2& q) { return std::hypot(p.x - q.x, p.y - q.y); }

Rect bounding_box(std::span<const Point2> ps) {
  if (ps.empty()) throw Error(ErrorCode::kEmptyPointSet, "bounding box of no points");
  Rect r{ps[0].x, ps[0].x, ps[0].y, ps[0].y};
  for (const auto& p : ps.subspan(1)) {
    r.xmin = std::min(r.xmin, p.x);
    r.xmax = std::max(r.xmax, p.x);
    r.ymin = std::min(r.ymin, p.y);
    r.ymax = std::max(r.ymax, p.y);
  }
  return r;
}

Rect bounding_box(const PointSet& ps, std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error(ErrorCode::kEmptyPointSet, "bounding box of no points");
  const auto& first = ps[indices[0]];
  Rect r{first.x, first.x, first.y, first.y};
  for (std::size_t i : indices.subspan(1)) {
    const auto& p = ps[i];
    r.xmin = std::min(r.xmin, p.x);
    r.xmax = std::max(r.xmax, p.x);
    r.ymin = std::min(r.ymin, p.y);
    r.ymax = std::max(r.ymax, p.y);
  }
  return r;
}

double lmax(const Rect& r) { return std::max(r.width(), r.height()); }

double rect_min_distance(const Rect& a, const Rect& b) {
  const double gap_x = std::max(0.0, std::max(a.xmin - b.xmax, b.xmin - a.xmax));
  const double gap_y = std::max(0.0, std::max(a.ymin - b.ymax, b.ymin - a.ymax));
  return std::hypot(gap_x, gap_y);
}

Ball enclosing_ball(const Rect& r) {
  return {r.xmin + 0.5 * r.width(), r.ymin + 0.5 * r.height(),
          0.5 * std::hypot(r.width(), r.height())};
}

}  // namespace wsp
