#include "doctest.h"
#include "oracles.hpp"

#include "hbox/errors.hpp"
#include "hbox/extremal.hpp"
#include "hbox/intersection.hpp"

#include <random>

using namespace hbox;

namespace {

Scalar q(const char* s) { return Scalar::parse(s); }

Member hollow(std::initializer_list<Interval> sides) { return Member::hollow(HollowBox(Box(sides))); }
Member solid(std::initializer_list<Interval> sides) { return Member::solid(Box(sides)); }

Family facet2() { return gen_facet_family({Box{Interval(0, 4), Interval(0, 4)}, Point{2, 2}}); }

// Independent generator: integer boxes drawn directly, hollow ones
// full-dimensional.
Family int_family(std::mt19937_64& rng, std::size_t d, std::size_t n, int grid, double solid_rate) {
  std::uniform_int_distribution<int> coord(0, grid);
  std::bernoulli_distribution is_solid(solid_rate);
  std::vector<Member> ms;
  for (std::size_t k = 0; k < n; ++k) {
    bool s = is_solid(rng);
    std::vector<Interval> sides;
    for (std::size_t i = 0; i < d; ++i) {
      int a = coord(rng), b = coord(rng);
      while (!s && a == b) b = coord(rng);
      sides.emplace_back(std::min(a, b), std::max(a, b));
    }
    Box box(sides);
    ms.push_back(s ? Member::solid(box) : Member::hollow(HollowBox(box)));
  }
  return Family(ms);
}

bool in_all(const Family& f, const Point& p) {
  for (const auto& m : f)
    if (!m.contains(p)) return false;
  return true;
}

}  // namespace

TEST_CASE("families reject empty input and mixed dimension") {
  CHECK_THROWS_AS(Family(std::vector<Member>{}), InputError);
  CHECK_THROWS_AS(Family({hollow({Interval(0, 1)}), hollow({Interval(0, 1), Interval(0, 1)})}), InputError);
}

TEST_CASE("build_grid candidates") {
  auto g1 = build_grid(Family({hollow({Interval(0, 1)})}));
  CHECK(g1.candidates[0] == std::vector<Scalar>{0, q("1/2"), 1});

  auto g2 = build_grid(Family({hollow({Interval(0, 2), Interval(0, 2)}), hollow({Interval(1, 3), Interval(1, 3)})}));
  std::vector<Scalar> want{0, q("1/2"), 1, q("3/2"), 2, q("5/2"), 3};
  CHECK(g2.candidates[0] == want);
  CHECK(g2.candidates[1] == want);
  CHECK(g2.point_count() == 49);

  auto g3 = build_grid(Family({solid({Interval(0, 0)})}));
  CHECK(g3.candidates[0] == std::vector<Scalar>{0});
}

TEST_CASE("oracle_intersect examples") {
  auto sq = hollow({Interval(0, 1), Interval(0, 1)});
  auto r = oracle_intersect(Family({sq, sq}));
  REQUIRE(r.witness);
  CHECK(*r.witness == Point{0, 0});

  CHECK(oracle_intersect(facet2()).empty());

  auto s = oracle_intersect(Family({solid({Interval(0, 2), Interval(0, 2)}), solid({Interval(1, 3), Interval(1, 3)})}));
  REQUIRE(s.witness);
  CHECK(*s.witness == Point{1, 1});
}

TEST_CASE("dfs_intersect examples") {
  auto r = dfs_intersect(Family({hollow({Interval(2, 5), Interval(-1, 3)})}));
  REQUIRE(r.witness);
  CHECK(*r.witness == Point{2, -1});
  CHECK(dfs_intersect(facet2()).empty());
  auto v3 = gen_vertex_family(VertexFamilySpec::uniform(Box{Interval(0, 1), Interval(0, 1), Interval(0, 1)}, 1));
  CHECK(v3.size() == 8);
  CHECK(dfs_intersect(v3).empty());
}

TEST_CASE("intersection_reps examples") {
  auto reps = intersection_reps(Family({hollow({Interval(0, 1)}), hollow({Interval(0, 2)})}));
  CHECK(reps == std::vector<Point>{Point{0}});

  auto reps2 = intersection_reps(Family({hollow({Interval(0, 2), Interval(0, 2)}), solid({Interval(1, 1), Interval(0, 2)})}));
  CHECK(reps2 == std::vector<Point>{Point{1, 0}, Point{1, 2}});

  CHECK(intersection_reps(facet2()).empty());
}

TEST_CASE("subset_check examples") {
  Box b{Interval(0, 1), Interval(0, 1)};
  auto v = gen_vertex_family(VertexFamilySpec::uniform(b, 1));
  std::vector<Member> part2{Member::solid(b)};
  for (std::size_t e = 1; e < 4; ++e) part2.push_back(v[e]);
  CHECK(subset_check(Family(part2), TargetSet::points({Point{0, 0}})));

  std::vector<Member> part3{Member::solid(b), v[2], v[3]};
  CHECK(subset_check(Family(part3), segment(Point{0, 0}, Point{0, 1})));
  // Not inside a single vertex: the whole left edge survives.
  CHECK_FALSE(subset_check(Family(part3), TargetSet::points({Point{0, 0}})));

  CHECK(subset_check(facet2(), TargetSet::points({Point{100, 100}})) == true);
  CHECK_THROWS_AS(subset_check(Family(part3), segment(Point{0, 0}, Point{1, 1})), InputError);
}

TEST_CASE("grid cap raises a resource error") {
  std::vector<Member> ms;
  for (int k = 0; k < 12; ++k) ms.push_back(hollow({Interval(k, 100 + k), Interval(k, 100 + k), Interval(k, 100 + k)}));
  EngineOptions tight;
  tight.candidate_cap = 1000;
  CHECK_THROWS_AS(oracle_intersect(Family(ms), tight), ResourceCapError);
  CHECK_NOTHROW(oracle_intersect(Family(ms)));
}

TEST_CASE("both algorithms agree with the lattice oracle on random families") {
  std::mt19937_64 rng(7);
  int nonempty = 0;
  for (int t = 0; t < 600; ++t) {
    std::size_t d = 1 + t % 4;
    std::size_t n = 1 + rng() % 7;
    Family f = int_family(rng, d, n, 5, t % 3 == 0 ? 0.3 : 0.0);
    bool truth = oracle::intersects(f);
    auto g = oracle_intersect(f);
    auto s = dfs_intersect(f);
    CAPTURE(t);
    CHECK(g.empty() == !truth);
    CHECK(s.empty() == !truth);
    if (g.witness) CHECK(in_all(f, *g.witness));
    if (s.witness) CHECK(in_all(f, *s.witness));
    nonempty += truth;

    // Every representative is a genuine common point, and every common
    // half-integer point is a candidate of the grid.
    for (const auto& p : intersection_reps(f)) CHECK(in_all(f, p));
  }
  CHECK(nonempty > 100);
  CHECK(nonempty < 500);
}

TEST_CASE("grid witness is the lexicographically least candidate point") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Family f = int_family(rng, 2, 3, 4, 0.0);
    auto reps = intersection_reps(f);
    auto w = oracle_intersect(f).witness;
    CHECK(reps.empty() == !w.has_value());
    if (w) {
      CHECK(std::is_sorted(reps.begin(), reps.end()));
      CHECK(*w == reps.front());
    }
  }
}

TEST_CASE("results are invariant under member order, translation and positive scaling") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t d = 1 + t % 3;
    Family f = int_family(rng, d, 2 + rng() % 5, 5, 0.2);
    bool base = dfs_intersect(f).empty();

    std::vector<Member> rev(f.members().rbegin(), f.members().rend());
    CHECK(dfs_intersect(Family(rev)).empty() == base);

    Scalar shift = q("7/3"), scale = q("5/2");
    std::vector<Member> moved;
    for (const auto& m : f) {
      std::vector<Interval> sides;
      for (const auto& s : m.hull().sides()) sides.emplace_back(s.lo() * scale + shift, s.hi() * scale + shift);
      moved.push_back(m.is_hollow() ? Member::hollow(HollowBox(Box(sides))) : Member::solid(Box(sides)));
    }
    CHECK(oracle_intersect(Family(moved)).empty() == base);
    CHECK(dfs_intersect(Family(moved)).empty() == base);
  }
}

TEST_CASE("adding a member never creates an intersection") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Family f = int_family(rng, 2, 4, 5, 0.0);
    Family g = f.with(int_family(rng, 2, 1, 5, 0.0)[0]);
    if (dfs_intersect(f).empty()) CHECK(dfs_intersect(g).empty());
  }
}

TEST_CASE("arrangement answers subfamily queries like a fresh oracle") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    Family f = int_family(rng, 3, 6, 4, 0.1);
    Arrangement arr(f);
    for (std::uint32_t mask = 1; mask < 64; mask += 5) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < 6; ++k)
        if (mask >> k & 1) idx.push_back(k);
      auto sub = f.subfamily(idx);
      CHECK(arr.first_point(idx).has_value() == !oracle_intersect(sub).empty());
    }
  }
}
