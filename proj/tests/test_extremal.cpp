#include "doctest.h"
#include "oracles.hpp"

#include "hbox/errors.hpp"
#include "hbox/extremal.hpp"

#include <random>

using namespace hbox;

namespace {

Box cube(std::size_t d, int lo, int hi) { return Box(std::vector<Interval>(d, Interval(lo, hi))); }
HollowBox hb(std::initializer_list<Interval> sides) { return HollowBox(Box(sides)); }

Family facet_family(std::size_t d) {
  std::vector<Scalar> c(d, Scalar(2));
  return gen_facet_family({cube(d, 0, 4), Point(c)});
}

Family vertex_family(std::size_t d) { return gen_vertex_family(VertexFamilySpec::uniform(cube(d, 0, 1), 1)); }

std::vector<Member> members_except(const Family& f, std::size_t skip) {
  std::vector<Member> out;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (k != skip) out.push_back(f[k]);
  return out;
}

}  // namespace

TEST_CASE("facet family for d = 2 matches the explicit list") {
  Family f = facet_family(2);
  std::vector<Member> want{
      Member::hollow(hb({Interval(0, 4), Interval(0, 4)})),
      Member::hollow(hb({Interval(0, 2), Interval(-1, 5)})),
      Member::hollow(hb({Interval(2, 4), Interval(-1, 5)})),
      Member::hollow(hb({Interval(-1, 5), Interval(0, 2)})),
      Member::hollow(hb({Interval(-1, 5), Interval(2, 4)})),
  };
  CHECK(f == Family(want));
  CHECK(oracle::defect(f) == 5);
}

TEST_CASE("facet family for d = 3") {
  Family f = gen_facet_family({cube(3, 0, 2), Point{1, 1, 1}});
  CHECK(f.size() == 7);
  CHECK(oracle::defect(f) == 7);
}

TEST_CASE("facet family rejects bad input") {
  CHECK_THROWS_AS(gen_facet_family({cube(2, 0, 4), Point{0, 2}}), InputError);
  CHECK_THROWS_AS(gen_facet_family({cube(1, 0, 4), Point{2}}), InputError);
  CHECK_THROWS_AS(gen_facet_family({Box{Interval(0, 0), Interval(0, 4)}, Point{0, 2}}), InputError);
}

TEST_CASE("vertex family for d = 2 matches the explicit list") {
  Family f = vertex_family(2);
  std::vector<Member> want{
      Member::hollow(hb({Interval(-1, 1), Interval(-1, 1)})),
      Member::hollow(hb({Interval(-1, 1), Interval(0, 2)})),
      Member::hollow(hb({Interval(0, 2), Interval(-1, 1)})),
      Member::hollow(hb({Interval(0, 2), Interval(0, 2)})),
  };
  CHECK(f == Family(want));
  CHECK(oracle::defect(f) == 4);
}

TEST_CASE("vertex family for d = 3 and d = 1") {
  Family f = vertex_family(3);
  CHECK(f.size() == 8);
  CHECK(oracle::defect(f) == 8);
  Family g = vertex_family(1);
  CHECK(g == Family({Member::hollow(hb({Interval(-1, 1)})), Member::hollow(hb({Interval(0, 2)}))}));
  CHECK(oracle::defect(g) == 2);
}

TEST_CASE("each vertex family member misses exactly its own vertex") {
  for (std::size_t d = 1; d <= 4; ++d) {
    Box b = cube(d, 0, 1);
    Family f = vertex_family(d);
    for (std::uint64_t e = 0; e < f.size(); ++e) {
      for (std::uint64_t v = 0; v < f.size(); ++v) {
        bool in = f[e].contains(vertex(b, BitString(static_cast<unsigned>(d), v)));
        CHECK(in == (e != v));
      }
    }
  }
}

TEST_CASE("pattern_of examples") {
  Box b = cube(2, 0, 1);
  auto p = pattern_of(hb({Interval(-1, 1), Interval(-1, 1)}), b);
  REQUIRE(p);
  CHECK(p->str() == "00");
  CHECK_FALSE(pattern_of(hb({Interval(-1, 2), Interval(0, 1)}), b).has_value());
  auto all = pattern_of(hb({Interval(-1, 2), Interval(-1, 2)}), b);
  REQUIRE(all);
  CHECK(all->str() == "**");
  CHECK_THROWS_AS(pattern_of(hb({Interval(1, 2), Interval(0, 1)}), b), InputError);
}

TEST_CASE("pattern_of matches exactly the missed vertices") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(0, 5);
  for (int t = 0; t < 500; ++t) {
    std::size_t d = 1 + t % 4;
    std::vector<Interval> bs, hs;
    for (std::size_t i = 0; i < d; ++i) {
      int lo = 1 + c(rng) % 2, hi = lo + c(rng) % 3;  // degenerate sides allowed
      bs.emplace_back(lo, hi);
      int a = lo - c(rng) % 2, z = hi + c(rng) % 2;
      if (a == z) z += 1;
      hs.emplace_back(a, z);
    }
    Box b(bs);
    HollowBox h{Box(hs)};
    auto p = pattern_of(h, b);
    unsigned ud = static_cast<unsigned>(d);
    bool any_missed = false;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
      BitString eps(ud, v);
      bool missed = !hollow_contains(h, vertex(b, eps));
      any_missed = any_missed || missed;
      if (p) CHECK(matches(eps, *p) == missed);
    }
    CHECK(p.has_value() == any_missed);
  }
}

TEST_CASE("facet recognizer") {
  auto acc = recognize_facet_form(facet_family(2));
  CHECK(acc.accepted);
  REQUIRE(acc.role_map.size() == 5);
  for (const auto& r : acc.role_map) CHECK(r.has_value());
  CHECK(acc.role_map[0]->kind == MemberRole::Kind::Boundary);
  CHECK(acc.chosen_box == cube(2, 0, 4));

  auto v = recognize_facet_form(vertex_family(2));
  CHECK_FALSE(v.accepted);

  Family f = facet_family(2);
  auto missing = recognize_facet_form(Family(members_except(f, 1)));
  CHECK_FALSE(missing.accepted);
  CHECK(missing.failed_condition == std::optional<std::string>("4"));

  CHECK(recognize_facet_form(facet_family(3)).accepted);
  CHECK(recognize_facet_form(Family({Member::hollow(hb({Interval(0, 1)}))})).failed_condition ==
        std::optional<std::string>("precondition"));
}

TEST_CASE("facet recognizer rejects a family whose members no longer share an interior point") {
  Family f = facet_family(2);
  // Move the right owner's inner wall to 3: its hull no longer reaches p.
  std::vector<Member> ms = f.members();
  ms[2] = Member::hollow(hb({Interval(3, 4), Interval(-1, 5)}));
  ms[1] = Member::hollow(hb({Interval(0, 1), Interval(-1, 5)}));
  auto r = recognize_facet_form(Family(ms));
  CHECK_FALSE(r.accepted);
  CHECK(r.failed_condition == std::optional<std::string>("2"));
}

TEST_CASE("vertex recognizer") {
  auto r = recognize_vertex_form(vertex_family(3));
  CHECK(r.accepted);
  CHECK(r.chosen_box == cube(3, 0, 1));
  CHECK_FALSE(recognize_vertex_form(facet_family(2)).accepted);

  // Widening one member on both sides of an axis gives its pattern a star.
  Family v = vertex_family(3);
  std::vector<Member> ms = v.members();
  ms[0] = Member::hollow(hb({Interval(-1, 2), Interval(-1, 1), Interval(-1, 1)}));
  auto star = recognize_vertex_form(Family(ms));
  CHECK_FALSE(star.accepted);
  CHECK(star.failed_condition == std::optional<std::string>("3'"));

  // A member holding every vertex of B on its boundary is allowed.
  auto extra = recognize_vertex_form(v.with(Member::hollow(HollowBox(Box{Interval(0, 1), Interval(-1, 2), Interval(-1, 2)}))));
  CHECK(extra.accepted);

  auto missing = recognize_vertex_form(Family(members_except(v, 5)));
  CHECK_FALSE(missing.accepted);
  CHECK(missing.failed_condition == std::optional<std::string>("2'"));
}

TEST_CASE("one-dimensional triple") {
  auto two = [](int a, int b) { return Member::hollow(HollowBox(Box{Interval(a, b)})); };
  CHECK(recognize_onedim_triple(Family({two(0, 1), two(1, 2), two(0, 2)})));
  CHECK_FALSE(recognize_onedim_triple(Family({two(0, 1), two(1, 2), two(2, 3)})));
  CHECK_FALSE(recognize_onedim_triple(Family({two(0, 1), two(0, 1)})));
  CHECK(recognize_onedim_triple(Family({two(0, 1), two(1, 2), two(0, 2), two(1, 2)})));
  CHECK_THROWS_AS(recognize_onedim_triple(vertex_family(2)), InputError);
}
