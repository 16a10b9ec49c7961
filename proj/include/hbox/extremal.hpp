#pragma once

#include "hbox/intersection.hpp"
#include "hbox/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hbox {

// Base box B and a point p in its interior. Generates the 2d+1 member
// family: the boundary of B plus, for every facet of B, a hollow box that
// contains that facet and passes through p.
struct FacetFamilySpec {
  Box box;
  Point p;
};

// Base box B and per-axis outer slack. Generates one hollow box per vertex
// of B, missing exactly that vertex.
struct VertexFamilySpec {
  Box box;
  std::vector<Scalar> margins;

  static VertexFamilySpec uniform(Box box, const Scalar& margin);
};

Family gen_facet_family(const FacetFamilySpec& spec);
Family gen_vertex_family(const VertexFamilySpec& spec);

// Pattern of the vertices of B missed by D, per axis: '0' when only the low
// endpoint lies strictly inside D's side, '1' when only the high one does,
// '*' when both do. nullopt when on some axis neither does, i.e. D contains
// every vertex of B. Requires B inside hull(D).
std::optional<Pattern> pattern_of(const HollowBox& d, const Box& b);

struct MemberRole {
  enum class Kind {
    Boundary,      // plays the boundary of B
    FacetOwner,    // contains facet (axis, side) of B
    MissesVertex,  // misses exactly one vertex of B
    MissesNone,    // contains every vertex of B
  };
  Kind kind = Kind::MissesNone;
  std::size_t axis = 0;
  int side = 0;
  std::optional<BitString> vertex;
};

std::string to_string(MemberRole::Kind k);

struct RecognitionReport {
  bool accepted = false;
  // Indexed by member; filled for every member when accepted.
  std::vector<std::optional<MemberRole>> role_map;
  std::optional<Box> chosen_box;
  std::optional<Point> chosen_p;
  // "1".."4" for the facet form, "1'".."3'" for the vertex form,
  // "precondition" when the family is outside the recognizer's domain.
  std::optional<std::string> failed_condition;
  std::string detail;
};

// Duplicate members are collapsed before either recognizer runs.
RecognitionReport recognize_facet_form(const Family& f, const EngineOptions& opts = {});
RecognitionReport recognize_vertex_form(const Family& f);

// d = 1: the distinct members are exactly {a,b}, {b,c}, {c,a} for three
// distinct values.
bool recognize_onedim_triple(const Family& f);

}  // namespace hbox
