#include "hbox/io.hpp"

#include "hbox/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace hbox {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) { throw InputError(path + ": " + reason); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

std::vector<Scalar> scalars_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json scalars_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

json indices_to_json(const std::vector<std::size_t>& v) { return json(v); }

}  // namespace

json to_json(const Scalar& s) {
  if (s.is_integer()) {
    BigInt n = s.numerator();
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
      return n.convert_to<std::int64_t>();
    }
  }
  return s.str();
}

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Scalar(BigInt(j.get<std::uint64_t>()), BigInt(1));
    return Scalar(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

json to_json(const Point& p) { return scalars_to_json(p.coords()); }

Point point_from_json(const json& j, const std::string& path) { return Point(scalars_from_json(j, path)); }

json to_json(const Box& b) { return {{"lo", to_json(b.lo_corner())}, {"hi", to_json(b.hi_corner())}}; }

json to_json(const Family& f) {
  json members = json::array();
  for (const Member& m : f) {
    json jm = to_json(m.hull());
    jm["kind"] = m.is_hollow() ? "hollow" : "solid";
    members.push_back(std::move(jm));
  }
  return {{"dim", f.dim()}, {"members", std::move(members)}};
}

Family family_from_json(const json& j) {
  const json& jd = field(j, "dim", "$");
  if (!jd.is_number_integer() || jd.get<std::int64_t>() < 1) fail("$.dim", "expected a positive integer");
  const auto dim = static_cast<std::size_t>(jd.get<std::int64_t>());
  const json& jm = field(j, "members", "$");
  if (!jm.is_array()) fail("$.members", "expected an array");
  if (jm.empty()) fail("$.members", "family must have at least one member");

  std::vector<Member> members;
  for (std::size_t k = 0; k < jm.size(); ++k) {
    const std::string path = "$.members[" + std::to_string(k) + "]";
    const json& kind = field(jm[k], "kind", path);
    if (!kind.is_string() || (kind != "solid" && kind != "hollow")) fail(path + ".kind", "expected \"solid\" or \"hollow\"");
    auto lo = scalars_from_json(field(jm[k], "lo", path), path + ".lo");
    auto hi = scalars_from_json(field(jm[k], "hi", path), path + ".hi");
    if (lo.size() != dim || hi.size() != dim) {
      fail(path, "expected " + std::to_string(dim) + " coordinates in lo and hi");
    }
    std::vector<Interval> sides;
    for (std::size_t a = 0; a < dim; ++a) {
      if (hi[a] < lo[a]) fail(path, "lo[" + std::to_string(a) + "] > hi[" + std::to_string(a) + "]");
      if (kind == "hollow" && lo[a] == hi[a]) {
        fail(path, "member " + std::to_string(k) + " is hollow but degenerate on axis " + std::to_string(a));
      }
      sides.emplace_back(lo[a], hi[a]);
    }
    Box b(std::move(sides));
    members.push_back(kind == "hollow" ? Member::hollow(HollowBox(std::move(b))) : Member::solid(std::move(b)));
  }
  return Family(std::move(members));
}

json to_json(const PatternSet& c) {
  json out = json::array();
  for (const Pattern& p : c) out.push_back(p.str());
  return out;
}

PatternSet pattern_set_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of pattern strings");
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a pattern string");
    texts.push_back(j[i].get<std::string>());
  }
  try {
    return PatternSet::parse(texts);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

json to_json(const IntersectionResult& r) {
  if (r.empty()) return {{"outcome", "empty"}};
  return {{"outcome", "witness"}, {"witness", to_json(*r.witness)}};
}

json to_json(const Defect& d) {
  json out{{"defect", d.infinite() ? json("inf") : json(*d.value)}};
  if (!d.infinite()) out["witness_subfamily"] = indices_to_json(d.witness_subfamily);
  return out;
}

json to_json(const CoverReport& r) {
  return {{"is_cover", r.is_cover},
          {"is_minimal", r.is_minimal},
          {"position_sets", r.position_sets},
          {"star_positions", r.star_positions},
          {"s", r.s},
          {"size", r.size},
          {"lemma1_ok", r.lemma1_ok},
          {"size_equals_bound", r.size_equals_bound},
          {"lemma1_equality_case", r.lemma1_equality_case},
          {"lemma3_class", {{"relation", to_string(r.lemma3_class.relation)}, {"case", r.lemma3_class.case_id}}},
          {"lemma3_ok", r.lemma3_ok}};
}

json to_json(const RecognitionReport& r) {
  json roles = json::array();
  for (const auto& role : r.role_map) {
    if (!role) {
      roles.push_back(nullptr);
      continue;
    }
    json jr{{"kind", to_string(role->kind)}};
    if (role->kind == MemberRole::Kind::FacetOwner) {
      jr["axis"] = role->axis;
      jr["side"] = role->side;
    }
    if (role->vertex) jr["vertex"] = role->vertex->str();
    roles.push_back(std::move(jr));
  }
  json out{{"accepted", r.accepted}, {"role_map", std::move(roles)}};
  out["chosen_box"] = r.chosen_box ? to_json(*r.chosen_box) : json(nullptr);
  out["chosen_p"] = r.chosen_p ? to_json(*r.chosen_p) : json(nullptr);
  out["failed_condition"] = r.failed_condition ? json(*r.failed_condition) : json(nullptr);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

json to_json(const HellyReport& r) {
  json pi = json::object();
  for (const auto& [k, v] : r.pi) pi[std::to_string(k)] = v;
  json out = to_json(r.defect);
  out["pi"] = std::move(pi);
  out["verdict"] = r.pass ? "pass" : "fail";
  if (!r.details.empty()) out["details"] = r.details;
  if (r.recognizer_outcome) out["recognizer"] = to_json(*r.recognizer_outcome);
  return out;
}

json to_json(const SolidHellyResult& r) {
  json out{{"verdict", r.pass ? "pass" : "fail"}, {"pairwise", r.pairwise}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  if (!r.details.empty()) out["details"] = r.details;
  return out;
}

json to_json(const Lemma4Config& c) {
  json boxes = json::array();
  for (const auto& h : c.boxes) boxes.push_back(to_json(h.shell()));
  return {{"dim", c.base.dim()}, {"base", to_json(c.base)}, {"boxes", std::move(boxes)}};
}

Lemma4Config lemma4_config_from_json(const json& j) {
  auto box_at = [&](const json& jb, const std::string& path) {
    Point lo = point_from_json(field(jb, "lo", path), path + ".lo");
    Point hi = point_from_json(field(jb, "hi", path), path + ".hi");
    try {
      return Box::from_corners(lo, hi);
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  };
  Box base = box_at(field(j, "base", "$"), "$.base");
  const json& jb = field(j, "boxes", "$");
  if (!jb.is_array()) fail("$.boxes", "expected an array");
  std::vector<HollowBox> boxes;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    const std::string path = "$.boxes[" + std::to_string(i) + "]";
    try {
      boxes.emplace_back(box_at(jb[i], path));
    } catch (const InputError& e) {
      std::string what = e.what();
      if (what.rfind("$", 0) == 0) throw;
      fail(path, what);
    }
  }
  return {std::move(base), std::move(boxes)};
}

json to_json(const Lemma4Outcome& o) {
  json out{{"verdict", o.pass ? "pass" : "fail"}};
  if (o.failed_part) out["failed_part"] = *o.failed_part;
  if (!o.details.empty()) out["details"] = o.details;
  return out;
}

json to_json(const SweepConfig& c) {
  return {{"mode", to_string(c.mode)},
          {"d", c.d},
          {"trials", c.trials},
          {"min_size", c.min_size},
          {"max_size", c.max_size},
          {"grid", c.grid},
          {"seed", c.seed},
          {"degenerate_rate", c.degenerate_rate},
          {"solid_fraction", c.solid_fraction},
          {"threads", c.threads}};
}

SweepConfig sweep_config_from_json(const json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  SweepConfig c;
  auto read_uint = [&](const char* key, auto& dst) {
    if (!j.contains(key)) return;
    const json& v = j[key];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(std::string("$.") + key, "expected a non-negative integer");
    dst = static_cast<std::remove_reference_t<decltype(dst)>>(v.get<std::uint64_t>());
  };
  auto read_rate = [&](const char* key, double& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) fail(std::string("$.") + key, "expected a number");
    dst = j[key].get<double>();
  };
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) fail("$.mode", "expected a string");
    try {
      c.mode = parse_sweep_mode(j["mode"].get<std::string>());
    } catch (const InputError& e) {
      fail("$.mode", e.what());
    }
  }
  read_uint("d", c.d);
  read_uint("trials", c.trials);
  read_uint("min_size", c.min_size);
  read_uint("max_size", c.max_size);
  read_uint("grid", c.grid);
  read_uint("seed", c.seed);
  read_uint("threads", c.threads);
  read_rate("degenerate_rate", c.degenerate_rate);
  read_rate("solid_fraction", c.solid_fraction);
  validate(c);
  return c;
}

json to_json(const SweepReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json jf{{"trial", f.index}, {"details", f.details}};
    if (f.family) jf["family"] = to_json(*f.family);
    if (f.lemma4) jf["lemma4"] = to_json(*f.lemma4);
    failures.push_back(std::move(jf));
  }
  return {{"trials", r.trials},
          {"passes", r.passes},
          {"failures", std::move(failures)},
          {"tallies", r.tallies}};
}

json make_report(const std::vector<std::string>& command, json config, json results) {
  return {{"version", version_string}, {"command", command}, {"config", std::move(config)}, {"results", std::move(results)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace hbox
