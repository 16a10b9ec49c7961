#include "doctest.h"

#include "hbox/errors.hpp"
#include "hbox/geometry.hpp"

using namespace hbox;

namespace {

Scalar q(const char* s) { return Scalar::parse(s); }
Box unit2() { return Box{Interval(0, 1), Interval(0, 1)}; }

}  // namespace

TEST_CASE("scalar parsing normalizes and rejects garbage") {
  CHECK(q("2/4") == q("1/2"));
  CHECK(q("-3/6").str() == "-1/2");
  CHECK(q("4/2").is_integer());
  CHECK(q("4/-2") == Scalar(-2));
  CHECK(q("7").str() == "7");
  CHECK(q("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "--1", "1e3", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::parse(bad), InputError);
  }
}

TEST_CASE("scalar arithmetic is exact") {
  CHECK(q("1/3") + q("1/6") == q("1/2"));
  CHECK(q("1/3") * 3 == Scalar(1));
  CHECK(midpoint(0, 1) == q("1/2"));
  CHECK(q("1/3") < q("1/2"));
  CHECK_THROWS(Scalar(1) / Scalar(0));
  CHECK(Scalar(1) / Scalar(3) - q("1/3") == Scalar(0));
}

TEST_CASE("bit strings use leftmost-is-most-significant order") {
  BitString b = BitString::parse("100");
  CHECK(b.code() == 4);
  CHECK(b[0]);
  CHECK_FALSE(b[2]);
  CHECK(b.with(2, true).str() == "101");
  CHECK(BitString::parse("011") < BitString::parse("100"));
  CHECK_THROWS_AS(BitString::parse("102"), InputError);
}

TEST_CASE("interval and box construction") {
  CHECK_THROWS_AS(Interval(1, 0), InputError);
  CHECK(Interval(1, 1).degenerate());
  Box b{Interval(0, 0), Interval(0, 1)};
  CHECK_FALSE(b.full_dimensional());
  CHECK(b.nondegenerate_axes() == 1);
  CHECK_THROWS_AS(HollowBox{b}, InputError);
  CHECK(Box::from_corners(Point{1, 2}, Point{3, 4}) == Box{Interval(1, 3), Interval(2, 4)});
}

TEST_CASE("box_contains") {
  CHECK(box_contains(unit2(), Point{0, 0}));
  CHECK_FALSE(box_contains(unit2(), Point{q("1/2"), 2}));
  CHECK(box_contains(Box{Interval(0, 0), Interval(0, 1)}, Point{0, q("1/2")}));
}

TEST_CASE("hollow_contains") {
  HollowBox h(unit2());
  CHECK(hollow_contains(h, Point{q("1/2"), 0}));
  CHECK_FALSE(hollow_contains(h, Point{q("1/2"), q("1/2")}));
  CHECK_FALSE(hollow_contains(h, Point{2, 0}));
  HollowBox one(Box{Interval(0, 1)});
  CHECK(hollow_contains(one, Point{0}));
  CHECK(hollow_contains(one, Point{1}));
  CHECK_FALSE(hollow_contains(one, Point{q("1/2")}));
}

TEST_CASE("hull") {
  CHECK(hull(HollowBox(unit2())) == unit2());
  Box b{Interval(-1, 5), Interval(0, 2)};
  CHECK(hull(HollowBox(b)) == b);
  Box c{Interval(0, 1), Interval(0, 1), Interval(0, 1)};
  CHECK(hull(HollowBox(c)) == c);
}

TEST_CASE("interior_contains") {
  CHECK(interior_contains(unit2(), Point{q("1/2"), q("1/2")}));
  CHECK_FALSE(interior_contains(unit2(), Point{0, q("1/2")}));
  Box flat{Interval(0, 0), Interval(0, 1)};
  for (auto p : {Point{0, 0}, Point{0, q("1/2")}, Point{1, 1}}) CHECK_FALSE(interior_contains(flat, p));
}

TEST_CASE("vertex") {
  CHECK(vertex(unit2(), BitString::parse("10")) == Point{1, 0});
  CHECK(vertex(unit2(), BitString::parse("11")) == Point{1, 1});
  Box flat{Interval(0, 0), Interval(0, 1)};
  CHECK(vertex(flat, BitString::parse("00")) == Point{0, 0});
  CHECK(vertex(flat, BitString::parse("10")) == Point{0, 0});
  CHECK_THROWS_AS(vertex(unit2(), BitString::parse("101")), InputError);
}

TEST_CASE("facet uses 0-based axes") {
  Box b{Interval(0, 4), Interval(0, 4)};
  CHECK(facet(b, 0, 0) == Box{Interval(0, 0), Interval(0, 4)});
  CHECK(facet(b, 1, 1) == Box{Interval(0, 4), Interval(4, 4)});
  Box c{Interval(0, 1), Interval(0, 1), Interval(0, 1)};
  CHECK(facet(c, 2, 0) == Box{Interval(0, 1), Interval(0, 1), Interval(0, 0)});
  CHECK_THROWS_AS(facet(c, 3, 0), InputError);
}

TEST_CASE("box_meet") {
  Box a{Interval(0, 2), Interval(0, 2)};
  Box b{Interval(1, 3), Interval(1, 3)};
  CHECK(box_meet(a, b) == Box{Interval(1, 2), Interval(1, 2)});
  CHECK_FALSE(box_meet(Box{Interval(0, 1), Interval(0, 1)}, Box{Interval(2, 3), Interval(0, 1)}).has_value());
  std::vector<Box> one{a};
  CHECK(box_meet(one) == a);
  CHECK(box_meet(Box{Interval(0, 1)}, Box{Interval(1, 2)}) == Box{Interval(1, 1)});
}

TEST_CASE("box_within_hollow") {
  HollowBox h(unit2());
  CHECK(box_within_hollow(Box{Interval(0, 1), Interval(0, 0)}, h));
  CHECK(box_within_hollow(Box{Interval(1, 1), Interval(q("1/4"), q("1/2"))}, h));
  CHECK_FALSE(box_within_hollow(Box{Interval(q("1/2"), q("1/2")), Interval(0, 1)}, h));
  CHECK_FALSE(box_within_hollow(Box{Interval(0, 0), Interval(0, 2)}, h));
}

TEST_CASE("segments and point targets") {
  auto vert = segment(Point{0, 0}, Point{0, 1});
  CHECK(vert.contains(Point{0, q("1/2")}));
  CHECK_FALSE(vert.contains(Point{0, 2}));
  auto diag = segment(Point{0, 0}, Point{1, 1});
  CHECK(diag.contains(Point{q("1/2"), q("1/2")}));
  CHECK_FALSE(diag.contains(Point{q("1/2"), 0}));
  auto pts = TargetSet::points({Point{0, 0}, Point{1, 1}});
  CHECK(pts.contains(Point{1, 1}));
  CHECK_FALSE(pts.contains(Point{q("1/2"), q("1/2")}));
  auto dot = segment(Point{1, 1}, Point{1, 1});
  CHECK(dot.contains(Point{1, 1}));
  CHECK_FALSE(dot.contains(Point{1, 0}));
}
