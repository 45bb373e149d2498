#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wsp {

/// A point in the plane. Construct through make_point() to get the
/// finiteness check; aggregate init is left open for literals in tests.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Throws Error(kNonFiniteCoordinate) on NaN or infinity.
Point2 make_point(double x, double y);

/// Axis-aligned closed rectangle. Zero width or height is allowed.
struct Rect {
  double xmin = 0.0;
  double xmax = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  bool contains(const Point2& p, double slack = 0.0) const {
    return p.x >= xmin - slack && p.x <= xmax + slack && p.y >= ymin - slack && p.y <= ymax + slack;
  }
  bool contains(const Rect& r, double slack = 0.0) const {
    return r.xmin >= xmin - slack && r.xmax <= xmax + slack && r.ymin >= ymin - slack &&
           r.ymax <= ymax + slack;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Ball {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;

  Point2 center() const { return {cx, cy}; }

  friend bool operator==(const Ball&, const Ball&) = default;
};

/// An ordered set of distinct, finite points. The index of a point is its
/// identity in every structure built on top of the set.
class PointSet {
 public:
  PointSet() = default;
  /// Throws on duplicates (kDuplicatePoint) or non-finite input.
  explicit PointSet(std::vector<Point2> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point2& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point2> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point2> points_;
};

double dist(const Point2& p, const Point2& q);

/// Smallest rectangle containing every point. Throws kEmptyPointSet.
Rect bounding_box(std::span<const Point2> ps);

/// Bounding box of the points of `ps` selected by `indices`.
Rect bounding_box(const PointSet& ps, std::span<const std::size_t> indices);

/// Length of the longer side.
double lmax(const Rect& r);

/// Distance between the closest points of two closed rectangles; 0 when
/// they intersect.
double rect_min_distance(const Rect& a, const Rect& b);

/// Smallest ball containing the rectangle: centred on it, radius equal to
/// half the diagonal.
Ball enclosing_ball(const Rect& r);

}  // namespace wsp
