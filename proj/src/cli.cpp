#include "hbox/cli.hpp"

#include "hbox/errors.hpp"
#include "hbox/extremal.hpp"
#include "hbox/helly.hpp"
#include "hbox/io.hpp"
#include "hbox/patterns.hpp"
#include "hbox/svg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hbox {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Scalar> parse_scalars(const std::string& s, const char* what) {
  std::vector<Scalar> out;
  for (const auto& part : split(s, ',')) {
    try {
      out.push_back(Scalar::parse(part));
    } catch (const InputError& e) {
      throw InputError(std::string(what) + ": " + e.what());
    }
  }
  if (out.empty()) throw InputError(std::string(what) + ": expected a comma-separated list of rationals");
  return out;
}

// "lo:hi,lo:hi,..."
Box parse_box(const std::string& s) {
  std::vector<Interval> sides;
  for (const auto& part : split(s, ',')) {
    auto ends = split(part, ':');
    if (ends.size() != 2) throw InputError("--box: expected lo:hi per axis, got '" + part + "'");
    sides.emplace_back(Scalar::parse(ends[0]), Scalar::parse(ends[1]));
  }
  if (sides.empty()) throw InputError("--box: no axes given");
  return Box(std::move(sides));
}

Box cube(std::size_t d, std::int64_t lo, std::int64_t hi) {
  return Box(std::vector<Interval>(d, Interval(lo, hi)));
}

class Runner {
public:
  Runner(std::ostream& out, const std::vector<std::string>& command, bool json_out)
      : out_(out), command_(command), json_(json_out), opts_(EngineOptions::from_env()) {}

  int intersect(const std::string& file, const std::string& alg) {
    Family f = family_from_json(read_json_file(file));
    json results = json::object();
    std::vector<std::pair<std::string, IntersectionResult>> runs;
    if (alg == "grid" || alg == "both") runs.emplace_back("grid", oracle_intersect(f, opts_));
    if (alg == "dfs" || alg == "both") runs.emplace_back("dfs", dfs_intersect(f));

    int code = exit_ok;
    std::string text;
    for (const auto& [name, r] : runs) {
      results[name] = to_json(r);
      text += name + ": " + (r.empty() ? "empty" : "witness " + r.witness->str()) + "\n";
      if (r.witness) {
        for (std::size_t k = 0; k < f.size(); ++k) {
          if (!f[k].contains(*r.witness)) {
            text += name + ": witness is not in member " + std::to_string(k) + "\n";
            code = exit_violation;
          }
        }
      }
    }
    if (runs.size() == 2) {
      bool agree = runs[0].second.empty() == runs[1].second.empty();
      results["agree"] = agree;
      text += agree ? "algorithms agree\n" : "algorithms DISAGREE\n";
      if (!agree) code = exit_violation;
    }
    emit({{"file", file}, {"alg", alg}}, results, text);
    return code;
  }

  int helly(const std::string& file, std::size_t k, bool defect_only) {
    Family f = family_from_json(read_json_file(file));
    json config{{"file", file}};
    if (k > 0) {
      PiResult r = pi_k(f, k);
      config["k"] = k;
      json results{{"pi", r.holds}};
      std::string text = "pi_" + std::to_string(k) + ": " + (r.holds ? "holds" : "fails");
      if (r.violating) {
        results["violating_subfamily"] = *r.violating;
        text += " (empty subfamily " + json(*r.violating).dump() + ")";
      }
      emit(config, results, text + "\n");
      return exit_ok;
    }
    if (defect_only) {
      Defect d = helly_defect(f, opts_);
      emit(config, to_json(d), d.str() + "\n");
      return exit_ok;
    }

    json results;
    std::string text;
    bool pass = true;
    if (f.all_solid()) {
      SolidHellyResult r = verify_solid_helly(f);
      Defect d = helly_defect(f, opts_);
      results = to_json(d);
      results["solid_helly"] = to_json(r);
      text = "defect: " + d.str() + "\nsolid helly: " + (r.pass ? "pass" : "FAIL") + "\n";
      pass = r.pass;
    } else if (f.all_hollow() && f.dim() <= 20) {
      HellyReport r = f.dim() == 1 ? verify_onedim(f, opts_) : f.dim() == 2 ? verify_theorem1(f, opts_) : verify_theorem2(f, opts_);
      results = to_json(r);
      text = "defect: " + r.defect.str() + "\n";
      for (const auto& [kk, v] : r.pi) text += "pi_" + std::to_string(kk) + ": " + (v ? "holds" : "fails") + "\n";
      if (r.recognizer_outcome) {
        text += std::string("exceptional form: ") + (r.recognizer_outcome->accepted ? "recognized" : "not recognized") + "\n";
      }
      text += std::string("verdict: ") + (r.pass ? "pass" : "FAIL") + (r.details.empty() ? "" : " (" + r.details + ")") + "\n";
      pass = r.pass;
    } else {
      Defect d = helly_defect(f, opts_);
      results = to_json(d);
      text = "defect: " + d.str() + "\n";
    }
    emit(config, results, text);
    return pass ? exit_ok : exit_violation;
  }

  int gen(const std::string& kind, std::size_t d, const std::string& box_arg, const std::string& p_arg,
          const std::string& margin_arg, const std::string& out_file) {
    std::optional<Box> box;
    if (!box_arg.empty()) {
      box = parse_box(box_arg);
      if (d != 0 && d != box->dim()) throw InputError("--d does not match the dimension of --box");
      d = box->dim();
    }
    if (d == 0) throw InputError("gen needs --d or --box");

    Family f = [&] {
      if (kind == "facet") {
        if (!margin_arg.empty()) throw InputError("--margin applies to vertex families only");
        Box b = box ? *box : cube(d, 0, 4);
        Point p;
        if (p_arg.empty()) {
          std::vector<Scalar> c;
          for (const auto& s : b.sides()) c.push_back(midpoint(s.lo(), s.hi()));
          p = Point(std::move(c));
        } else {
          p = Point(parse_scalars(p_arg, "--p"));
        }
        if (p.dim() != d) throw InputError("--p has the wrong dimension");
        return gen_facet_family({b, p});
      }
      if (!p_arg.empty()) throw InputError("--p applies to facet families only");
      Box b = box ? *box : cube(d, 0, 1);
      std::vector<Scalar> margins = margin_arg.empty() ? std::vector<Scalar>{Scalar(1)} : parse_scalars(margin_arg, "--margin");
      if (margins.size() == 1) margins.assign(d, margins.front());
      return gen_vertex_family({b, margins});
    }();

    std::string doc = to_json(f).dump(2) + "\n";
    if (out_file.empty()) {
      out_ << doc;
    } else {
      write_text_file(out_file, doc);
    }
    return exit_ok;
  }

  int covers(const std::string& action, std::size_t d, const std::vector<std::string>& pats, const std::string& group,
             bool search, std::uint64_t budget) {
    const SwapGroup g = group == "global" ? SwapGroup::Global : SwapGroup::PerPosition;
    json config{{"action", action}, {"group", group}};
    if (action == "enumerate") {
      if (d == 0) throw InputError("covers enumerate needs --d");
      if (!pats.empty()) throw InputError("covers enumerate takes no patterns");
      CoverEnumeration e = enumerate_minimal_covers(static_cast<unsigned>(d), {g, search, budget});
      config["d"] = d;
      json classes = json::array();
      std::string text;
      for (const auto& c : e.classes) {
        classes.push_back(to_json(c));
        text += c.str() + "\n";
      }
      text += std::to_string(e.classes.size()) + " classes (" + std::to_string(e.raw_count) + " minimal covers)\n";
      emit(config, {{"classes", classes}, {"class_count", e.classes.size()}, {"raw_count", e.raw_count}}, text);
      return exit_ok;
    }

    if (pats.empty()) throw InputError("covers " + action + " needs at least one pattern");
    PatternSet c = PatternSet::parse(pats);
    if (d != 0 && d != c.dim()) throw InputError("--d does not match the pattern length");
    config["patterns"] = to_json(c);

    if (action == "check") {
      CoverCheck r = is_cover(c);
      json results{{"is_cover", r.is_cover}};
      std::string text = r.is_cover ? "cover: yes\n" : "cover: no (uncovered " + r.uncovered->str() + ")\n";
      if (r.uncovered) results["uncovered"] = r.uncovered->str();
      emit(config, results, text);
      return exit_ok;
    }
    if (action == "minimal") {
      bool minimal = is_minimal_cover(c);
      json results{{"is_minimal", minimal}};
      std::string text = std::string("minimal cover: ") + (minimal ? "yes" : "no") + "\n";
      if (!minimal && is_cover(c).is_cover) {
        PatternSet m = minimalize(c);
        results["minimalized"] = to_json(m);
        text += "minimal subcover: " + m.str() + "\n";
      }
      emit(config, results, text);
      return exit_ok;
    }
    // analyze
    CoverReport r = analyze(c);
    std::ostringstream text;
    text << "size: " << r.size << "\ns: " << r.s << "\nposition sets:";
    for (const auto& e : r.position_sets) text << " {" << e << "}";
    text << "\nlemma1: " << (r.lemma1_ok ? "ok" : "VIOLATED") << (r.size_equals_bound ? " (equality)" : "")
         << "\nlemma3: " << to_string(r.lemma3_class.relation)
         << (r.lemma3_class.case_id.empty() ? "" : " " + r.lemma3_class.case_id) << (r.lemma3_ok ? "" : " VIOLATED")
         << "\n";
    emit(config, to_json(r), text.str());
    return r.lemma1_ok && r.lemma1_equality_case && r.lemma3_ok ? exit_ok : exit_violation;
  }

  int verify_num(long long d_max) {
    if (d_max < 0) throw InputError("--d-max must be >= 0");
    json rows = json::array();
    std::ostringstream text;
    text << std::setw(4) << "d" << std::setw(4) << "s" << "  relation  cases  \n";
    std::size_t mismatches = 0;
    for (long long d = 0; d <= d_max; ++d) {
      for (long long s = 0; s <= d; ++s) {
        Relation direct = num_trichotomy(d, s);
        Relation listed = num_trichotomy_cases(d, s);
        bool ok = direct == listed;
        mismatches += !ok;
        rows.push_back({{"d", d}, {"s", s}, {"relation", to_string(direct)}, {"cases", to_string(listed)}, {"ok", ok}});
        text << std::setw(4) << d << std::setw(4) << s << "  " << std::setw(8) << std::left << to_string(direct)
             << "  " << std::setw(7) << to_string(listed) << std::right << (ok ? "" : "  MISMATCH") << "\n";
      }
    }
    text << "mismatches: " << mismatches << "\n";
    emit({{"d_max", d_max}}, {{"rows", rows}, {"mismatches", mismatches}}, text.str());
    return mismatches == 0 ? exit_ok : exit_violation;
  }

  int verify_sweep(const SweepConfig& cfg, const std::string& replay_dir) {
    SweepReport r = sweep(cfg, opts_);
    std::ostringstream text;
    text << "mode: " << to_string(cfg.mode) << "\nd: " << cfg.d << "\ntrials: " << r.trials << "\npasses: " << r.passes
         << "\nfailures: " << r.failures.size() << "\n";
    for (const auto& [k, v] : r.tallies) text << "  " << k << ": " << v << "\n";
    for (const auto& f : r.failures) text << "FAIL trial " << f.index << ": " << f.details << "\n";

    if (!replay_dir.empty() && !r.failures.empty()) {
      std::filesystem::create_directories(replay_dir);
      for (const auto& f : r.failures) {
        json doc;
        if (f.family) doc = to_json(*f.family);
        if (f.lemma4) {
          std::vector<Member> members{Member::solid(f.lemma4->base)};
          for (const auto& h : f.lemma4->boxes) members.push_back(Member::hollow(h));
          doc = to_json(Family(std::move(members)));
          doc["lemma4"] = to_json(*f.lemma4);
        }
        doc["trial"] = f.index;
        doc["details"] = f.details;
        auto path = std::filesystem::path(replay_dir) / ("trial-" + std::to_string(f.index) + ".json");
        write_text_file(path.string(), doc.dump(2) + "\n");
      }
    }
    emit(to_json(cfg), to_json(r), text.str());
    return r.failures.empty() ? exit_ok : exit_violation;
  }

  int render(const std::string& file, const std::vector<std::string>& marks, const std::string& out_file) {
    Family f = family_from_json(read_json_file(file));
    std::vector<Point> pts;
    for (const auto& m : marks) pts.emplace_back(parse_scalars(m, "--mark"));
    std::string svg = render_svg(f, pts).str();
    if (out_file.empty()) {
      out_ << svg;
    } else {
      write_text_file(out_file, svg);
    }
    return exit_ok;
  }

private:
  void emit(const json& config, const json& results, const std::string& text) {
    if (json_) {
      out_ << make_report(command_, config, results).dump(2) << "\n";
    } else {
      out_ << text;
    }
  }

  std::ostream& out_;
  std::vector<std::string> command_;
  bool json_;
  EngineOptions opts_;
};

SweepMode mode_for(const std::string& what) {
  if (what == "thm1") return SweepMode::Theorem1;
  if (what == "thm2") return SweepMode::Theorem2;
  if (what == "lemma4") return SweepMode::Lemma4;
  if (what == "solid") return SweepMode::Solid;
  if (what == "agreement") return SweepMode::OracleAgreement;
  return SweepMode::OneDim;
}

std::size_t default_dim(SweepMode m) {
  switch (m) {
    case SweepMode::Theorem1: return 2;
    case SweepMode::Theorem2: return 3;
    case SweepMode::OracleAgreement: return 4;
    case SweepMode::OneDim: return 1;
    default: return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection and Helly-number tools for hollow axis-aligned boxes", "hbox"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "Print a JSON report instead of text");
  app.set_version_flag("--version", version_string);

  std::string file, alg = "both", out_file;
  auto* intersect = app.add_subcommand("intersect", "Decide whether a family has a common point");
  intersect->add_option("family", file, "Family document (JSON)")->required();
  intersect->add_option("--alg", alg, "grid, dfs or both")->check(CLI::IsMember({"grid", "dfs", "both"}));

  std::size_t k = 0;
  bool defect_only = false;
  auto* helly = app.add_subcommand("helly", "Helly defect, Pi_k and theorem checks for a family");
  helly->add_option("family", file, "Family document (JSON)")->required();
  auto* k_opt = helly->add_option("--k", k, "Check Pi_k only")->check(CLI::PositiveNumber);
  helly->add_flag("--defect", defect_only, "Print the Helly defect only")->excludes(k_opt);

  std::string gen_kind, box_arg, p_arg, margin_arg;
  std::size_t dim = 0;
  auto* gen = app.add_subcommand("gen", "Generate an extremal family");
  gen->add_option("kind", gen_kind, "facet or vertex")->required()->check(CLI::IsMember({"facet", "vertex"}));
  gen->add_option("--d", dim, "Dimension");
  gen->add_option("--box", box_arg, "Base box as lo:hi per axis, e.g. 0:4,0:4");
  gen->add_option("--p", p_arg, "Interior point of the base box (facet family), e.g. 2,2");
  gen->add_option("--margin", margin_arg, "Outer slack (vertex family): one value or one per axis");
  gen->add_option("-o,--output", out_file, "Output file (default: stdout)");

  std::string cover_action, group = "per-position";
  std::vector<std::string> patterns;
  bool search = false;
  std::uint64_t budget = EnumerateOptions{}.node_budget;
  auto* covers = app.add_subcommand("covers", "Pattern covers of the Boolean cube");
  covers->add_option("action", cover_action, "check, minimal, analyze or enumerate")
      ->required()
      ->check(CLI::IsMember({"check", "minimal", "analyze", "enumerate"}));
  covers->add_option("patterns", patterns, "Patterns over 0, 1 and *");
  covers->add_option("--d", dim, "Dimension");
  covers->add_option("--group", group, "Symmetry group for classes: per-position or global")
      ->check(CLI::IsMember({"per-position", "global"}));
  covers->add_flag("--search", search, "Allow backtracking enumeration for d = 3, 4");
  covers->add_option("--budget", budget, "Node budget for --search");

  std::string what, config_file, replay_dir;
  SweepConfig sweep_cfg;
  long long d_max = 20;
  auto* verify = app.add_subcommand("verify", "Randomized verification sweeps");
  verify->add_option("what", what, "thm1, thm2, lemma4, solid, agreement, onedim or num")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "lemma4", "solid", "agreement", "onedim", "num"}));
  auto* trials_opt = verify->add_option("--trials", sweep_cfg.trials, "Number of trials");
  auto* seed_opt = verify->add_option("--seed", sweep_cfg.seed, "Master seed");
  auto* grid_opt = verify->add_option("--grid", sweep_cfg.grid, "Endpoints are drawn from 0..G");
  auto* d_opt = verify->add_option("--d", sweep_cfg.d, "Dimension (maximum dimension for agreement)");
  auto* min_opt = verify->add_option("--min-size", sweep_cfg.min_size, "Smallest family size");
  auto* max_opt = verify->add_option("--max-size", sweep_cfg.max_size, "Largest family size");
  auto* threads_opt = verify->add_option("--threads", sweep_cfg.threads, "Worker threads (0: all cores)");
  auto* degen_opt = verify->add_option("--degenerate-rate", sweep_cfg.degenerate_rate, "lemma4: share of degenerate base boxes");
  auto* solid_opt = verify->add_option("--solid-fraction", sweep_cfg.solid_fraction, "agreement: share of solid members");
  verify->add_option("--config", config_file, "SweepConfig JSON; explicit flags override it");
  verify->add_option("--replay-dir", replay_dir, "Write failing inputs here as family documents");
  verify->add_option("--d-max", d_max, "num: largest d in the table");

  std::vector<std::string> marks;
  auto* render = app.add_subcommand("render", "Draw a planar family as SVG");
  render->add_option("family", file, "Family document (JSON)")->required();
  render->add_option("-o,--output", out_file, "Output file (default: stdout)");
  render->add_option("--mark", marks, "Point to mark, e.g. 1/2,0 (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_input;
  }

  Runner runner(out, args, json_out);
  try {
    if (*intersect) return runner.intersect(file, alg);
    if (*helly) return runner.helly(file, k, defect_only);
    if (*gen) return runner.gen(gen_kind, dim, box_arg, p_arg, margin_arg, out_file);
    if (*covers) return runner.covers(cover_action, dim, patterns, group, search, budget);
    if (*render) return runner.render(file, marks, out_file);
    if (*verify) {
      if (what == "num") return runner.verify_num(d_max);
      SweepConfig cfg;
      cfg.mode = mode_for(what);
      cfg.d = default_dim(cfg.mode);
      if (cfg.mode == SweepMode::OneDim) cfg.grid = 3;
      if (!config_file.empty()) {
        cfg = sweep_config_from_json(read_json_file(config_file));
        if (cfg.mode != mode_for(what)) throw InputError("--config mode does not match '" + what + "'");
      }
      if (*trials_opt) cfg.trials = sweep_cfg.trials;
      if (*seed_opt) cfg.seed = sweep_cfg.seed;
      if (*grid_opt) cfg.grid = sweep_cfg.grid;
      if (*d_opt) cfg.d = sweep_cfg.d;
      if (*min_opt) cfg.min_size = sweep_cfg.min_size;
      if (*max_opt) cfg.max_size = sweep_cfg.max_size;
      if (*threads_opt) cfg.threads = sweep_cfg.threads;
      if (*degen_opt) cfg.degenerate_rate = sweep_cfg.degenerate_rate;
      if (*solid_opt) cfg.solid_fraction = sweep_cfg.solid_fraction;
      return runner.verify_sweep(cfg, replay_dir);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::logic_error& e) {
    err << "property violation: " << e.what() << "\n";
    return exit_violation;
  }
  return exit_input;
}

}  // namespace hbox
