#pragma once

#include "hbox/helly.hpp"
#include "hbox/patterns.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hbox {

using json = nlohmann::json;

inline constexpr const char* version_string = "hbox 1.0.0";

// Integers become JSON integers when they fit in 64 bits, everything else
// becomes a "p/q" string. Floats are never produced or accepted.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& path);

json to_json(const Point& p);
Point point_from_json(const json& j, const std::string& path);
json to_json(const Box& b);

// FamilyDocument:
//   {"dim": d, "members": [{"kind": "solid"|"hollow", "lo": [...], "hi": [...]}, ...]}
// Parse errors are InputErrors prefixed with the JSON path of the offending
// value, e.g. "$.members[2].lo[0]: ...".
json to_json(const Family& f);
Family family_from_json(const json& j);

json to_json(const PatternSet& c);
PatternSet pattern_set_from_json(const json& j, const std::string& path = "$");

json to_json(const IntersectionResult& r);
json to_json(const Defect& d);
json to_json(const CoverReport& r);
json to_json(const RecognitionReport& r);
json to_json(const HellyReport& r);
json to_json(const SolidHellyResult& r);
json to_json(const Lemma4Config& c);
Lemma4Config lemma4_config_from_json(const json& j);
json to_json(const Lemma4Outcome& o);

json to_json(const SweepConfig& c);
// Missing keys keep their defaults.
SweepConfig sweep_config_from_json(const json& j);
json to_json(const SweepReport& r);

// ReportDocument: {"version", "command", "config", "results"}.
json make_report(const std::vector<std::string>& command, json config, json results);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hbox
