#include "hbox/intersection.hpp"

#include "hbox/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace hbox {

Member Member::solid(Box b) { return Member(MemberKind::Solid, std::move(b)); }

Member Member::hollow(HollowBox h) { return Member(MemberKind::Hollow, h.shell()); }

HollowBox Member::as_hollow() const {
  if (!is_hollow()) throw InputError("member is solid, not hollow");
  return HollowBox(box_);
}

bool Member::contains(const Point& p) const {
  return is_hollow() ? hollow_contains(HollowBox(box_), p) : box_contains(box_, p);
}

Family::Family(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("family must have at least one member");
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i].dim() != members_.front().dim()) {
      throw InputError("family member " + std::to_string(i) + " has dimension " +
                       std::to_string(members_[i].dim()) + ", expected " +
                       std::to_string(members_.front().dim()));
    }
  }
}

Family Family::of_hollow(std::vector<HollowBox> boxes) {
  std::vector<Member> members;
  members.reserve(boxes.size());
  for (auto& h : boxes) members.push_back(Member::hollow(std::move(h)));
  return Family(std::move(members));
}

bool Family::all_hollow() const {
  return std::all_of(members_.begin(), members_.end(), [](const Member& m) { return m.is_hollow(); });
}

bool Family::all_solid() const {
  return std::none_of(members_.begin(), members_.end(), [](const Member& m) { return m.is_hollow(); });
}

Family Family::subfamily(std::span<const std::size_t> indices) const {
  std::vector<Member> sub;
  sub.reserve(indices.size());
  for (std::size_t i : indices) sub.push_back(members_.at(i));
  return Family(std::move(sub));
}

Family Family::with(Member extra) const {
  std::vector<Member> m = members_;
  m.push_back(std::move(extra));
  return Family(std::move(m));
}

std::uint64_t GridFrame::point_count() const {
  std::uint64_t n = 1;
  for (const auto& c : candidates) {
    if (c.empty()) return 0;
    if (n > std::numeric_limits<std::uint64_t>::max() / c.size()) return std::numeric_limits<std::uint64_t>::max();
    n *= c.size();
  }
  return n;
}

GridFrame build_grid(const Family& f) {
  GridFrame g;
  g.endpoints.resize(f.dim());
  g.candidates.resize(f.dim());
  for (std::size_t a = 0; a < f.dim(); ++a) {
    auto& ends = g.endpoints[a];
    for (const Member& m : f) {
      ends.push_back(m.hull().side(a).lo());
      ends.push_back(m.hull().side(a).hi());
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    auto& cand = g.candidates[a];
    cand.reserve(2 * ends.size() - 1);
    for (std::size_t k = 0; k < ends.size(); ++k) {
      if (k) cand.push_back(midpoint(ends[k - 1], ends[k]));
      cand.push_back(ends[k]);
    }
  }
  return g;
}

EngineOptions EngineOptions::from_env() {
  EngineOptions opts;
  if (const char* env = std::getenv("HH_CAND_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InputError(std::string("HH_CAND_CAP is not a positive integer: ") + env);
    opts.candidate_cap = v;
  }
  return opts;
}

namespace {

// Bit set over an arbitrary number of members.
struct WideMask {
  std::vector<std::uint64_t> words;

  WideMask& operator|=(const WideMask& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
    return *this;
  }
  friend WideMask operator|(WideMask a, const WideMask& b) { return a |= b; }
  friend bool operator==(const WideMask&, const WideMask&) = default;
};

void set_bit(std::uint64_t& m, std::size_t i) { m |= std::uint64_t{1} << i; }
void set_bit(WideMask& m, std::size_t i) { m.words[i / 64] |= std::uint64_t{1} << (i % 64); }

template <class Mask>
Mask zero_mask(std::size_t bits) {
  if constexpr (std::is_same_v<Mask, std::uint64_t>) {
    (void)bits;
    return 0;
  } else {
    return WideMask{std::vector<std::uint64_t>((bits + 63) / 64, 0)};
  }
}

// Depth-first walk over candidate index tuples in lexicographic order. A
// point lies in every hollow member iff, per member, some coordinate sits on
// one of that member's endpoints; masks[a][c] records which members have an
// endpoint at candidate c on axis a. Prefixes that can no longer reach the
// full mask are skipped.
template <class Mask, class Visit>
struct Walker {
  const std::vector<std::uint32_t>& lo;
  const std::vector<std::vector<Mask>>& masks;
  const std::vector<Mask>& suffix;
  const Mask& full;
  Visit& visit;
  std::vector<std::uint32_t> idx;

  bool walk(std::size_t axis, const Mask& acc) {
    const std::size_t d = lo.size();
    const auto& row = masks[axis];
    for (std::size_t c = 0; c < row.size(); ++c) {
      Mask next = acc | row[c];
      if ((next | suffix[axis + 1]) != full) continue;
      idx[axis] = lo[axis] + static_cast<std::uint32_t>(c);
      if (axis + 1 == d) {
        if (!visit(idx)) return false;
      } else if (!walk(axis + 1, next)) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

Arrangement::Arrangement(const Family& f, const EngineOptions& opts) : family_(f), grid_(build_grid(f)) {
  if (grid_.point_count() > opts.candidate_cap) {
    throw ResourceCapError("candidate grid has more than " + std::to_string(opts.candidate_cap) +
                           " points; use the backtracking algorithm or raise HH_CAND_CAP");
  }
  spans_.reserve(f.size());
  for (const Member& m : f) {
    std::vector<AxisSpan> s;
    s.reserve(f.dim());
    for (std::size_t a = 0; a < f.dim(); ++a) {
      s.push_back({*endpoint_index(a, m.hull().side(a).lo()), *endpoint_index(a, m.hull().side(a).hi())});
    }
    spans_.push_back(std::move(s));
  }
}

std::optional<std::uint32_t> Arrangement::endpoint_index(std::size_t axis, const Scalar& x) const {
  const auto& ends = grid_.endpoints[axis];
  auto it = std::lower_bound(ends.begin(), ends.end(), x);
  if (it == ends.end() || *it != x) return std::nullopt;
  return static_cast<std::uint32_t>(2 * (it - ends.begin()));
}

std::vector<std::size_t> Arrangement::all_members() const {
  std::vector<std::size_t> all(family_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

Point Arrangement::to_point(const std::vector<std::uint32_t>& idx) const {
  std::vector<Scalar> c;
  c.reserve(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) c.push_back(grid_.candidates[a][idx[a]]);
  return Point(std::move(c));
}

template <class Visit>
void Arrangement::enumerate(std::span<const std::size_t> members, Visit&& visit) const {
  if (members.empty()) throw InputError("intersection query needs at least one member");
  const std::size_t d = grid_.dim();
  std::vector<std::uint32_t> lo(d, 0);
  std::vector<std::uint32_t> hi(d, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::size_t> hollow;
  for (std::size_t m : members) {
    for (std::size_t a = 0; a < d; ++a) {
      lo[a] = std::max(lo[a], spans_.at(m)[a].lo);
      hi[a] = std::min(hi[a], spans_[m][a].hi);
    }
    if (family_[m].is_hollow()) hollow.push_back(m);
  }
  for (std::size_t a = 0; a < d; ++a) {
    if (hi[a] < lo[a]) return;
  }

  auto run = [&]<class Mask>(Mask full) {
    std::vector<std::vector<Mask>> masks(d);
    std::vector<Mask> suffix(d + 1, zero_mask<Mask>(hollow.size()));
    for (std::size_t a = 0; a < d; ++a) {
      masks[a].assign(hi[a] - lo[a] + 1, zero_mask<Mask>(hollow.size()));
      for (std::size_t h = 0; h < hollow.size(); ++h) {
        const AxisSpan& s = spans_[hollow[h]][a];
        if (s.lo >= lo[a] && s.lo <= hi[a]) set_bit(masks[a][s.lo - lo[a]], h);
        if (s.hi >= lo[a] && s.hi <= hi[a]) set_bit(masks[a][s.hi - lo[a]], h);
      }
    }
    for (std::size_t a = d; a-- > 0;) {
      suffix[a] = suffix[a + 1];
      for (const Mask& m : masks[a]) suffix[a] = suffix[a] | m;
    }
    Walker<Mask, std::remove_reference_t<Visit>> w{lo, masks, suffix, full, visit, std::vector<std::uint32_t>(d)};
    w.walk(0, zero_mask<Mask>(hollow.size()));
  };

  if (hollow.size() <= 64) {
    std::uint64_t full = hollow.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hollow.size()) - 1;
    run(full);
  } else {
    WideMask full = zero_mask<WideMask>(hollow.size());
    for (std::size_t h = 0; h < hollow.size(); ++h) set_bit(full, h);
    run(full);
  }
}

std::optional<Point> Arrangement::first_point(std::span<const std::size_t> members) const {
  std::optional<Point> out;
  enumerate(members, [&](const std::vector<std::uint32_t>& idx) {
    out = to_point(idx);
    return false;
  });
  return out;
}

std::vector<Point> Arrangement::points(std::span<const std::size_t> members) const {
  std::vector<Point> out;
  enumerate(members, [&](const std::vector<std::uint32_t>& idx) {
    out.push_back(to_point(idx));
    return true;
  });
  return out;
}

bool Arrangement::intersection_within(std::span<const std::size_t> members, const TargetSet& t) const {
  const std::size_t d = grid_.dim();
  if (t.dim() != d) throw InputError("subset_check: target dimension mismatch");
  if (!first_point(members)) return true;

  // Translate t into candidate-index space.
  std::vector<std::vector<std::uint32_t>> pts;
  for (const Point& p : t.defining_points()) {
    std::vector<std::uint32_t> idx(d);
    for (std::size_t a = 0; a < d; ++a) {
      auto i = endpoint_index(a, p[a]);
      if (!i) {
        throw InputError("subset_check: target coordinate " + p[a].str() + " on axis " + std::to_string(a) +
                         " is not a member endpoint");
      }
      idx[a] = *i;
    }
    pts.push_back(std::move(idx));
  }

  if (t.is_segment()) {
    const auto& p = pts[0];
    const auto& q = pts[1];
    std::size_t moving = d;
    for (std::size_t a = 0; a < d; ++a) {
      if (p[a] == q[a]) continue;
      if (moving != d) throw InputError("subset_check: segment target must be axis parallel");
      moving = a;
    }
    bool ok = true;
    enumerate(members, [&](const std::vector<std::uint32_t>& idx) {
      for (std::size_t a = 0; a < d; ++a) {
        if (a == moving) {
          if (idx[a] < std::min(p[a], q[a]) || idx[a] > std::max(p[a], q[a])) ok = false;
        } else if (idx[a] != p[a]) {
          ok = false;
        }
      }
      return ok;
    });
    return ok;
  }

  bool ok = true;
  enumerate(members, [&](const std::vector<std::uint32_t>& idx) {
    ok = std::find(pts.begin(), pts.end(), idx) != pts.end();
    return ok;
  });
  return ok;
}

IntersectionResult oracle_intersect(const Family& f, const EngineOptions& opts) {
  Arrangement arr(f, opts);
  auto all = arr.all_members();
  return {arr.first_point(all)};
}

namespace {

struct FacetSearch {
  std::vector<HollowBox> hollow;

  std::optional<Point> descend(std::size_t k, const Box& box) const {
    if (k == hollow.size()) return box.lo_corner();
    const HollowBox& h = hollow[k];
    // Already flat against a facet of h: every point of box is on h.
    if (box_within_hollow(box, h)) return descend(k + 1, box);
    for (std::size_t axis = 0; axis < box.dim(); ++axis) {
      for (int side = 0; side < 2; ++side) {
        const Scalar& x = h.shell().side(axis).endpoint(side);
        if (!box.side(axis).contains(x)) continue;
        std::vector<Interval> sides = box.sides();
        sides[axis] = Interval(x, x);
        if (auto w = descend(k + 1, Box(std::move(sides)))) return w;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

IntersectionResult dfs_intersect(const Family& f) {
  std::optional<Box> meet = f[0].hull();
  FacetSearch search;
  for (const Member& m : f) {
    meet = box_meet(*meet, m.hull());
    if (!meet) return IntersectionResult::none();
    if (m.is_hollow()) search.hollow.push_back(m.as_hollow());
  }
  return {search.descend(0, *meet)};
}

std::vector<Point> intersection_reps(const Family& f, const EngineOptions& opts) {
  Arrangement arr(f, opts);
  auto all = arr.all_members();
  return arr.points(all);
}

bool subset_check(const Family& f, const TargetSet& t, const EngineOptions& opts) {
  Arrangement arr(f, opts);
  auto all = arr.all_members();
  return arr.intersection_within(all, t);
}

}  // namespace hbox
