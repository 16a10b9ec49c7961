#pragma once

#include "hbox/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hbox {

enum class MemberKind { Solid, Hollow };

// One set of a family: a solid box, or the boundary of a full-dimensional box.
class Member {
public:
  static Member solid(Box b);
  static Member hollow(HollowBox h);

  MemberKind kind() const { return kind_; }
  bool is_hollow() const { return kind_ == MemberKind::Hollow; }
  // The box itself for solids, the convex hull for hollow members.
  const Box& hull() const { return box_; }
  HollowBox as_hollow() const;
  std::size_t dim() const { return box_.dim(); }
  bool contains(const Point& p) const;

  friend bool operator==(const Member&, const Member&) = default;
  friend auto operator<=>(const Member&, const Member&) = default;

private:
  Member(MemberKind kind, Box box) : kind_(kind), box_(std::move(box)) {}

  MemberKind kind_;
  Box box_;
};

// Nonempty ordered list of members sharing one dimension.
class Family {
public:
  explicit Family(std::vector<Member> members);
  static Family of_hollow(std::vector<HollowBox> boxes);

  std::size_t dim() const { return members_.front().dim(); }
  std::size_t size() const { return members_.size(); }
  const Member& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Member>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool all_hollow() const;
  bool all_solid() const;
  Family subfamily(std::span<const std::size_t> indices) const;
  Family with(Member extra) const;

  friend bool operator==(const Family&, const Family&) = default;

private:
  std::vector<Member> members_;
};

// Per-axis endpoint lists of a family and the face representatives of the
// induced product arrangement: endpoints interleaved with the midpoints of
// consecutive endpoints.
struct GridFrame {
  std::vector<std::vector<Scalar>> endpoints;
  std::vector<std::vector<Scalar>> candidates;

  std::size_t dim() const { return endpoints.size(); }
  // Number of candidate points, saturating at UINT64_MAX.
  std::uint64_t point_count() const;
};

GridFrame build_grid(const Family& f);

struct IntersectionResult {
  std::optional<Point> witness;

  bool empty() const { return !witness.has_value(); }
  static IntersectionResult none() { return {}; }
};

struct EngineOptions {
  static constexpr std::uint64_t default_candidate_cap = 100'000'000;
  // Grid oracle refuses families whose candidate grid exceeds this many points.
  std::uint64_t candidate_cap = default_candidate_cap;

  // Default options with the cap overridden by HH_CAND_CAP when it is set.
  static EngineOptions from_env();
};

// Compressed candidate grid of a family. Coordinates are replaced by their
// index in the per-axis candidate list (member endpoints sit at even
// indices), so membership tests are integer comparisons. Queries may name
// any subset of the members: a finer grid still represents every face of
// a subfamily's arrangement.
class Arrangement {
public:
  explicit Arrangement(const Family& f, const EngineOptions& opts = {});

  const Family& family() const { return family_; }
  const GridFrame& grid() const { return grid_; }

  // Lexicographically least candidate point in every listed member.
  std::optional<Point> first_point(std::span<const std::size_t> members) const;
  // All candidate points in every listed member, in lexicographic order.
  std::vector<Point> points(std::span<const std::size_t> members) const;
  // Every candidate point in the listed members' intersection lies in t.
  // t must be grid aligned (see subset_check).
  bool intersection_within(std::span<const std::size_t> members, const TargetSet& t) const;

  std::vector<std::size_t> all_members() const;

private:
  struct AxisSpan {
    std::uint32_t lo;
    std::uint32_t hi;
  };
  // Per member, per axis: candidate indices of the hull endpoints.
  std::vector<std::vector<AxisSpan>> spans_;
  Family family_;
  GridFrame grid_;

  template <class Visit>
  void enumerate(std::span<const std::size_t> members, Visit&& visit) const;
  Point to_point(const std::vector<std::uint32_t>& idx) const;
  std::optional<std::uint32_t> endpoint_index(std::size_t axis, const Scalar& x) const;
};

// Ground truth: the lexicographically least candidate point lying in every
// member. Throws ResourceCapError when the grid exceeds opts.candidate_cap.
IntersectionResult oracle_intersect(const Family& f, const EngineOptions& opts = {});

// Backtracking over one facet per hollow member, starting from the meet of
// all hulls. The witness is the low corner of the first nonempty leaf.
IntersectionResult dfs_intersect(const Family& f);

std::vector<Point> intersection_reps(const Family& f, const EngineOptions& opts = {});

// True iff the intersection of f lies inside t. t must be a union of closed
// faces of f's arrangement: every defining coordinate is a member endpoint on
// its axis, and a segment moves along at most one axis. Throws InputError
// otherwise, unless the intersection is empty.
bool subset_check(const Family& f, const TargetSet& t, const EngineOptions& opts = {});

}  // namespace hbox
