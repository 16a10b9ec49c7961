#include "hbox/geometry.hpp"

#include "hbox/errors.hpp"

#include <algorithm>

namespace hbox {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(expected) +
                     " vs " + std::to_string(got) + ")");
  }
}

}  // namespace

Interval::Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw InputError("interval [" + lo_.str() + ", " + hi_.str() + "] has lo > hi");
}

std::string Point::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

Box::Box(std::vector<Interval> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) throw InputError("box must have dimension >= 1");
}

Box Box::from_corners(const Point& lo, const Point& hi) {
  require_dim(lo.dim(), hi.dim(), "Box::from_corners");
  std::vector<Interval> sides;
  sides.reserve(lo.dim());
  for (std::size_t i = 0; i < lo.dim(); ++i) sides.emplace_back(lo[i], hi[i]);
  return Box(std::move(sides));
}

Point Box::lo_corner() const {
  std::vector<Scalar> c;
  c.reserve(dim());
  for (const auto& s : sides_) c.push_back(s.lo());
  return Point(std::move(c));
}

Point Box::hi_corner() const {
  std::vector<Scalar> c;
  c.reserve(dim());
  for (const auto& s : sides_) c.push_back(s.hi());
  return Point(std::move(c));
}

bool Box::full_dimensional() const { return nondegenerate_axes() == dim(); }

std::size_t Box::nondegenerate_axes() const {
  return static_cast<std::size_t>(
      std::count_if(sides_.begin(), sides_.end(), [](const Interval& s) { return !s.degenerate(); }));
}

std::string Box::str() const {
  std::string s;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (i) s += "x";
    s += "[" + sides_[i].lo().str() + "," + sides_[i].hi().str() + "]";
  }
  return s;
}

HollowBox::HollowBox(Box shell) : shell_(std::move(shell)) {
  for (std::size_t i = 0; i < shell_.dim(); ++i) {
    if (shell_.side(i).degenerate()) {
      throw InputError("hollow box " + shell_.str() + " is degenerate on axis " + std::to_string(i));
    }
  }
}

bool box_contains(const Box& b, const Point& p) {
  require_dim(b.dim(), p.dim(), "box_contains");
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!b.side(i).contains(p[i])) return false;
  }
  return true;
}

bool hollow_contains(const HollowBox& h, const Point& p) {
  require_dim(h.dim(), p.dim(), "hollow_contains");
  bool on_face = false;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Interval& s = h.shell().side(i);
    if (!s.contains(p[i])) return false;
    on_face = on_face || s.is_endpoint(p[i]);
  }
  return on_face;
}

bool interior_contains(const Box& b, const Point& p) {
  require_dim(b.dim(), p.dim(), "interior_contains");
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!b.side(i).strictly_contains(p[i])) return false;
  }
  return true;
}

Box hull(const HollowBox& h) { return h.shell(); }

Point vertex(const Box& b, const VertexIndex& eps) {
  require_dim(b.dim(), eps.dim(), "vertex");
  std::vector<Scalar> c;
  c.reserve(b.dim());
  for (unsigned i = 0; i < eps.dim(); ++i) c.push_back(b.side(i).endpoint(eps[i] ? 1 : 0));
  return Point(std::move(c));
}

Box facet(const Box& b, std::size_t axis, int side) {
  if (axis >= b.dim()) throw InputError("facet: axis out of range");
  if (side != 0 && side != 1) throw InputError("facet: side must be 0 or 1");
  if (b.side(axis).degenerate()) throw InputError("facet: box is degenerate on axis " + std::to_string(axis));
  std::vector<Interval> sides = b.sides();
  const Scalar& x = b.side(axis).endpoint(side);
  sides[axis] = Interval(x, x);
  return Box(std::move(sides));
}

std::optional<Box> box_meet(const Box& a, const Box& b) {
  require_dim(a.dim(), b.dim(), "box_meet");
  std::vector<Interval> sides;
  sides.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Scalar& lo = std::max(a.side(i).lo(), b.side(i).lo());
    const Scalar& hi = std::min(a.side(i).hi(), b.side(i).hi());
    if (hi < lo) return std::nullopt;
    sides.emplace_back(lo, hi);
  }
  return Box(std::move(sides));
}

std::optional<Box> box_meet(std::span<const Box> boxes) {
  if (boxes.empty()) throw InputError("box_meet of an empty list");
  std::optional<Box> acc = boxes.front();
  for (std::size_t k = 1; k < boxes.size() && acc; ++k) acc = box_meet(*acc, boxes[k]);
  return acc;
}

bool box_within(const Box& inner, const Box& outer) {
  require_dim(inner.dim(), outer.dim(), "box_within");
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    if (inner.side(i).lo() < outer.side(i).lo() || outer.side(i).hi() < inner.side(i).hi()) return false;
  }
  return true;
}

bool box_within_hollow(const Box& f, const HollowBox& h) {
  if (!box_within(f, h.shell())) return false;
  for (std::size_t k = 0; k < f.dim(); ++k) {
    const Interval& s = f.side(k);
    if (s.degenerate() && h.shell().side(k).is_endpoint(s.lo())) return true;
  }
  return false;
}

TargetSet TargetSet::points(std::vector<Point> pts) {
  if (pts.empty()) throw InputError("target point set must be nonempty");
  for (const auto& p : pts) require_dim(pts.front().dim(), p.dim(), "TargetSet::points");
  return TargetSet(std::move(pts));
}

TargetSet TargetSet::segment(Point p, Point q) {
  require_dim(p.dim(), q.dim(), "segment");
  return TargetSet(Segment{std::move(p), std::move(q)});
}

std::size_t TargetSet::dim() const {
  if (const auto* s = as_segment()) return s->p.dim();
  return std::get<std::vector<Point>>(shape_).front().dim();
}

std::vector<Point> TargetSet::defining_points() const {
  if (const auto* s = as_segment()) return {s->p, s->q};
  return std::get<std::vector<Point>>(shape_);
}

bool TargetSet::contains(const Point& x) const {
  require_dim(dim(), x.dim(), "TargetSet::contains");
  if (const auto* pts = std::get_if<std::vector<Point>>(&shape_)) {
    return std::find(pts->begin(), pts->end(), x) != pts->end();
  }
  // x = p + t (q - p) for a single t in [0, 1].
  const Segment& s = std::get<Segment>(shape_);
  std::optional<Scalar> t;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Scalar span = s.q[i] - s.p[i];
    Scalar off = x[i] - s.p[i];
    if (span == Scalar(0)) {
      if (off != Scalar(0)) return false;
      continue;
    }
    Scalar ti = off / span;
    if (t && *t != ti) return false;
    t = ti;
  }
  return !t || (Scalar(0) <= *t && *t <= Scalar(1));
}

TargetSet segment(const Point& p, const Point& q) { return TargetSet::segment(p, q); }

}  // namespace hbox
