#include "hbox/extremal.hpp"

#include "hbox/errors.hpp"

#include <algorithm>
#include <set>

namespace hbox {

VertexFamilySpec VertexFamilySpec::uniform(Box box, const Scalar& margin) {
  std::vector<Scalar> m(box.dim(), margin);
  return {std::move(box), std::move(m)};
}

Family gen_facet_family(const FacetFamilySpec& spec) {
  const Box& b = spec.box;
  const std::size_t d = b.dim();
  if (d < 2) throw InputError("facet family needs d >= 2");
  if (!b.full_dimensional()) throw InputError("facet family needs a full-dimensional base box");
  if (!interior_contains(b, spec.p)) throw InputError("facet family: p " + spec.p.str() + " is not interior to " + b.str());

  std::vector<HollowBox> members{HollowBox(b)};
  for (std::size_t i = 0; i < d; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<Interval> sides;
      for (std::size_t k = 0; k < d; ++k) {
        const Interval& s = b.side(k);
        if (k != i) {
          sides.emplace_back(s.lo() - Scalar(1), s.hi() + Scalar(1));
        } else if (j == 0) {
          sides.emplace_back(s.lo(), spec.p[i]);
        } else {
          sides.emplace_back(spec.p[i], s.hi());
        }
      }
      members.emplace_back(Box(std::move(sides)));
    }
  }
  return Family::of_hollow(std::move(members));
}

Family gen_vertex_family(const VertexFamilySpec& spec) {
  const Box& b = spec.box;
  const std::size_t d = b.dim();
  if (!b.full_dimensional()) throw InputError("vertex family needs a full-dimensional base box");
  if (spec.margins.size() != d) throw InputError("vertex family needs one margin per axis");
  for (const Scalar& m : spec.margins) {
    if (m <= Scalar(0)) throw InputError("vertex family margins must be positive");
  }
  if (d > 20) throw ResourceCapError("vertex family would have 2^" + std::to_string(d) + " members");

  std::vector<HollowBox> members;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
    BitString eps(static_cast<unsigned>(d), code);
    std::vector<Interval> sides;
    for (unsigned i = 0; i < d; ++i) {
      const Interval& s = b.side(i);
      if (eps[i]) {
        sides.emplace_back(s.lo(), s.hi() + spec.margins[i]);
      } else {
        sides.emplace_back(s.lo() - spec.margins[i], s.hi());
      }
    }
    members.emplace_back(Box(std::move(sides)));
  }
  return Family::of_hollow(std::move(members));
}

std::optional<Pattern> pattern_of(const HollowBox& d, const Box& b) {
  if (!box_within(b, d.shell())) {
    throw InputError("pattern_of: " + b.str() + " is not inside the hull " + d.shell().str());
  }
  const unsigned dim = static_cast<unsigned>(b.dim());
  std::string rho(dim, '*');
  for (unsigned i = 0; i < dim; ++i) {
    const Interval& side = d.shell().side(i);
    bool low_inside = side.strictly_contains(b.side(i).lo());
    bool high_inside = side.strictly_contains(b.side(i).hi());
    if (low_inside && high_inside) {
      rho[i] = '*';
    } else if (low_inside) {
      rho[i] = '0';
    } else if (high_inside) {
      rho[i] = '1';
    } else {
      return std::nullopt;
    }
  }
  return Pattern::parse(rho);
}

std::string to_string(MemberRole::Kind k) {
  switch (k) {
    case MemberRole::Kind::Boundary: return "boundary";
    case MemberRole::Kind::FacetOwner: return "facet_owner";
    case MemberRole::Kind::MissesVertex: return "misses_vertex";
    case MemberRole::Kind::MissesNone: return "misses_none";
  }
  return "?";
}

namespace {

// Distinct members in first-occurrence order, plus the map from member index
// to distinct index.
struct Collapsed {
  std::vector<HollowBox> boxes;
  std::vector<std::size_t> slot;
};

Collapsed collapse(const Family& f) {
  Collapsed c;
  for (const Member& m : f) {
    HollowBox h = m.as_hollow();
    auto it = std::find(c.boxes.begin(), c.boxes.end(), h);
    c.slot.push_back(static_cast<std::size_t>(it - c.boxes.begin()));
    if (it == c.boxes.end()) c.boxes.push_back(std::move(h));
  }
  return c;
}

RecognitionReport reject(std::string condition, std::string detail) {
  RecognitionReport r;
  r.failed_condition = std::move(condition);
  r.detail = std::move(detail);
  return r;
}

std::vector<std::optional<MemberRole>> expand_roles(const Collapsed& c, const std::vector<MemberRole>& roles) {
  std::vector<std::optional<MemberRole>> out;
  out.reserve(c.slot.size());
  for (std::size_t s : c.slot) out.emplace_back(roles[s]);
  return out;
}

}  // namespace

RecognitionReport recognize_facet_form(const Family& f, const EngineOptions& opts) {
  if (f.dim() < 2) return reject("precondition", "facet form needs d >= 2");
  if (!f.all_hollow()) return reject("precondition", "facet form needs an all-hollow family");
  const std::size_t d = f.dim();
  const Collapsed c = collapse(f);

  // Conditions are checked in the order (3), (4), (2); the furthest any
  // candidate boundary member got is what gets reported.
  RecognitionReport best = reject("3", "no member contains a facet of any candidate base box");
  int best_rank = -1;
  auto note = [&](int rank, const char* cond, std::string detail) {
    if (rank > best_rank) {
      best_rank = rank;
      best = reject(cond, std::move(detail));
    }
  };

  for (std::size_t cand = 0; cand < c.boxes.size(); ++cand) {
    const Box b = c.boxes[cand].shell();
    std::vector<MemberRole> roles(c.boxes.size());
    roles[cand].kind = MemberRole::Kind::Boundary;
    std::vector<std::vector<std::size_t>> owners(2 * d);

    bool cond3 = true;
    for (std::size_t k = 0; k < c.boxes.size() && cond3; ++k) {
      if (k == cand) continue;
      std::size_t held = 0;
      for (std::size_t i = 0; i < d; ++i) {
        for (int j = 0; j < 2; ++j) {
          if (box_within_hollow(facet(b, i, j), c.boxes[k])) {
            ++held;
            owners[2 * i + j].push_back(k);
            roles[k] = MemberRole{MemberRole::Kind::FacetOwner, i, j, std::nullopt};
          }
        }
      }
      if (held != 1) {
        cond3 = false;
        note(0, "3", "member " + c.boxes[k].shell().str() + " contains " + std::to_string(held) + " facets of " + b.str());
      }
    }
    if (!cond3) continue;

    auto uncovered = std::find_if(owners.begin(), owners.end(), [](const auto& o) { return o.empty(); });
    if (uncovered != owners.end()) {
      auto slot = static_cast<std::size_t>(uncovered - owners.begin());
      note(1, "4", "facet on axis " + std::to_string(slot / 2) + " side " + std::to_string(slot % 2) + " of " +
                       b.str() + " lies in no other member");
      continue;
    }

    // Grid includes B's own endpoints so every cell is inside int B or not.
    std::vector<Member> probe{Member::solid(b)};
    for (std::size_t k = 0; k < c.boxes.size(); ++k) {
      if (k != cand) probe.push_back(Member::hollow(c.boxes[k]));
    }
    std::optional<Point> p;
    for (const Point& q : intersection_reps(Family(std::move(probe)), opts)) {
      if (interior_contains(b, q)) {
        p = q;
        break;
      }
    }
    if (!p) {
      note(2, "2", "no interior point of " + b.str() + " lies in all other members");
      continue;
    }

    RecognitionReport r;
    r.accepted = true;
    r.chosen_box = b;
    r.chosen_p = std::move(p);
    r.role_map = expand_roles(c, roles);
    return r;
  }
  return best;
}

RecognitionReport recognize_vertex_form(const Family& f) {
  if (!f.all_hollow()) return reject("precondition", "vertex form needs an all-hollow family");
  const std::size_t d = f.dim();
  if (d > 20) throw ResourceCapError("vertex form check would visit 2^" + std::to_string(d) + " vertices");
  const Collapsed c = collapse(f);

  std::vector<Box> hulls;
  for (const auto& h : c.boxes) hulls.push_back(h.shell());
  std::optional<Box> b = box_meet(hulls);
  if (!b) return reject("1'", "the hulls have empty common intersection");
  if (!b->full_dimensional()) {
    RecognitionReport r = reject("1'", "the common intersection of the hulls " + b->str() + " is degenerate");
    r.chosen_box = b;
    return r;
  }

  std::vector<MemberRole> roles(c.boxes.size());
  std::vector<bool> missed(std::size_t{1} << d, false);
  for (std::size_t k = 0; k < c.boxes.size(); ++k) {
    std::optional<Pattern> rho = pattern_of(c.boxes[k], *b);
    if (!rho) continue;
    if (rho->star_count() > 0) {
      RecognitionReport r = reject("3'", "member " + c.boxes[k].shell().str() + " misses the vertices matching " +
                                             rho->str());
      r.chosen_box = b;
      return r;
    }
    BitString v(static_cast<unsigned>(d), rho->value());
    roles[k] = MemberRole{MemberRole::Kind::MissesVertex, 0, 0, v};
    missed[v.code()] = true;
  }
  auto hole = std::find(missed.begin(), missed.end(), false);
  if (hole != missed.end()) {
    BitString v(static_cast<unsigned>(d), static_cast<std::uint64_t>(hole - missed.begin()));
    RecognitionReport r = reject("2'", "vertex " + v.str() + " of " + b->str() + " lies in every member");
    r.chosen_box = b;
    return r;
  }

  RecognitionReport r;
  r.accepted = true;
  r.chosen_box = b;
  r.role_map = expand_roles(c, roles);
  return r;
}

bool recognize_onedim_triple(const Family& f) {
  if (f.dim() != 1) throw InputError("recognize_onedim_triple needs d = 1");
  if (!f.all_hollow()) return false;
  std::set<Box> distinct;
  std::set<Scalar> values;
  for (const Member& m : f) {
    distinct.insert(m.hull());
    values.insert(m.hull().side(0).lo());
    values.insert(m.hull().side(0).hi());
  }
  return distinct.size() == 3 && values.size() == 3;
}

}  // namespace hbox
