#pragma once

#include "hbox/bits.hpp"
#include "hbox/scalar.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hbox {

// Closed interval [lo, hi] with lo <= hi; lo == hi is allowed.
class Interval {
public:
  Interval(Scalar lo, Scalar hi);

  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  const Scalar& endpoint(int side) const { return side == 0 ? lo_ : hi_; }
  bool degenerate() const { return lo_ == hi_; }

  bool contains(const Scalar& x) const { return lo_ <= x && x <= hi_; }
  bool strictly_contains(const Scalar& x) const { return lo_ < x && x < hi_; }
  bool is_endpoint(const Scalar& x) const { return x == lo_ || x == hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;

private:
  Scalar lo_;
  Scalar hi_;
};

class Point {
public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic by coordinate.
  friend auto operator<=>(const Point&, const Point&) = default;

private:
  std::vector<Scalar> coords_;
};

// Axis-aligned box, a product of closed intervals. Degenerate sides are
// allowed, so a Box may be lower dimensional (even a single point).
class Box {
public:
  explicit Box(std::vector<Interval> sides);
  Box(std::initializer_list<Interval> sides) : Box(std::vector<Interval>(sides)) {}
  // Box spanned by the corner points lo and hi.
  static Box from_corners(const Point& lo, const Point& hi);

  std::size_t dim() const { return sides_.size(); }
  const Interval& side(std::size_t axis) const { return sides_[axis]; }
  const std::vector<Interval>& sides() const { return sides_; }
  Point lo_corner() const;
  Point hi_corner() const;

  bool full_dimensional() const;
  std::size_t nondegenerate_axes() const;
  std::string str() const;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;

private:
  std::vector<Interval> sides_;
};

// The boundary of a full-dimensional box. In dimension 1 this is the
// two-point set {lo, hi}.
class HollowBox {
public:
  explicit HollowBox(Box shell);

  const Box& shell() const { return shell_; }
  std::size_t dim() const { return shell_.dim(); }

  friend bool operator==(const HollowBox&, const HollowBox&) = default;
  friend auto operator<=>(const HollowBox&, const HollowBox&) = default;

private:
  Box shell_;
};

bool box_contains(const Box& b, const Point& p);
bool hollow_contains(const HollowBox& h, const Point& p);
bool interior_contains(const Box& b, const Point& p);
Box hull(const HollowBox& h);

Point vertex(const Box& b, const VertexIndex& eps);

// Facet of b on the hyperplane x_axis = (side ? hi : lo); axes are 0-based.
Box facet(const Box& b, std::size_t axis, int side);

// Common intersection, or nullopt when empty. The list must be nonempty.
std::optional<Box> box_meet(std::span<const Box> boxes);
std::optional<Box> box_meet(const Box& a, const Box& b);

// inner is a subset of outer.
bool box_within(const Box& inner, const Box& outer);

// True iff the box f lies inside the hollow box h: f is inside hull(h) and
// flat against one of its facets. Exact for any convex f, since a convex set
// inside the boundary of a box lies in a single facet.
bool box_within_hollow(const Box& f, const HollowBox& h);

// Closed segment conv{p, q}; p == q gives a single point.
struct Segment {
  Point p;
  Point q;
};

// A finite point set or a closed segment, used as the right-hand side of
// containment queries.
class TargetSet {
public:
  static TargetSet points(std::vector<Point> pts);
  static TargetSet segment(Point p, Point q);

  bool contains(const Point& x) const;
  std::size_t dim() const;
  // Every coordinate that defines the set (point coordinates or segment
  // endpoints).
  std::vector<Point> defining_points() const;
  bool is_segment() const { return std::holds_alternative<Segment>(shape_); }
  const Segment* as_segment() const { return std::get_if<Segment>(&shape_); }

private:
  explicit TargetSet(std::variant<std::vector<Point>, Segment> shape) : shape_(std::move(shape)) {}
  std::variant<std::vector<Point>, Segment> shape_;
};

TargetSet segment(const Point& p, const Point& q);

}  // namespace hbox
