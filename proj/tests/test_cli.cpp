#include "doctest.h"

#include "hbox/cli.hpp"
#include "hbox/io.hpp"

#include <filesystem>
#include <sstream>

using namespace hbox;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "hbox-cli-test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("gen then helly --defect prints the defect") {
  std::string f = tmp("facet2.json");
  CHECK(run({"gen", "facet", "--d", "2", "-o", f}).code == 0);
  auto r = run({"helly", f, "--defect"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");

  std::string v = tmp("vertex3.json");
  CHECK(run({"gen", "vertex", "--d", "3", "-o", v}).code == 0);
  CHECK(run({"helly", v, "--defect"}).out == "8\n");
  auto full = run({"helly", v});
  CHECK(full.code == 0);
  CHECK(full.out.find("verdict: pass") != std::string::npos);
  CHECK(run({"helly", v, "--k", "7"}).out.find("holds") != std::string::npos);
  CHECK(run({"helly", v, "--k", "8"}).out.find("fails") != std::string::npos);
}

TEST_CASE("gen options") {
  auto r = run({"gen", "facet", "--box", "0:2,0:2,0:2", "--p", "1,1,1"});
  CHECK(r.code == 0);
  Family f = family_from_json(json::parse(r.out));
  CHECK(f.size() == 7);
  CHECK(run({"gen", "vertex", "--d", "2", "--margin", "1/2"}).code == 0);
  CHECK(run({"gen", "facet", "--d", "2", "--p", "0,2"}).code == 2);
  CHECK(run({"gen", "facet"}).code == 2);
  CHECK(run({"gen", "facet", "--d", "3", "--box", "0:1,0:1"}).code == 2);
}

TEST_CASE("covers subcommands") {
  auto e = run({"covers", "enumerate", "--d", "2"});
  CHECK(e.code == 0);
  CHECK(e.out.find("5 classes") != std::string::npos);
  auto e1 = run({"covers", "enumerate", "--d", "1", "--json"});
  CHECK(json::parse(e1.out)["results"]["class_count"] == 2);
  CHECK(run({"covers", "enumerate", "--d", "2", "--group", "global"}).out.find("6 classes") != std::string::npos);
  CHECK(run({"covers", "enumerate", "--d", "3"}).code == 2);
  CHECK(run({"covers", "enumerate", "--d", "5", "--search"}).code == 3);

  CHECK(run({"covers", "check", "0*", "10"}).out.find("uncovered 11") != std::string::npos);
  CHECK(run({"covers", "minimal", "0*", "1*", "11"}).out.find("minimal subcover: {0*,1*}") != std::string::npos);
  auto a = run({"covers", "analyze", "00", "01", "10", "11", "--json"});
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["results"]["lemma3_class"]["case"] == "{0,1}^d");
  CHECK(run({"covers", "analyze", "0*", "1*", "11"}).code == 2);
  CHECK(run({"covers", "check", "0*", "1"}).code == 2);
}

TEST_CASE("verify subcommands") {
  auto n = run({"verify", "num", "--d-max", "20"});
  CHECK(n.code == 0);
  CHECK(n.out.find("mismatches: 0") != std::string::npos);

  auto t = run({"verify", "thm1", "--trials", "50", "--seed", "3", "--json"});
  CHECK(t.code == 0);
  json doc = json::parse(t.out);
  CHECK(doc["results"]["failures"].empty());
  CHECK(doc["config"]["seed"] == 3);
  CHECK(run({"verify", "thm1", "--trials", "50", "--seed", "3", "--json"}).out == t.out);

  CHECK(run({"verify", "lemma4", "--trials", "40", "--d", "3"}).code == 0);
  CHECK(run({"verify", "agreement", "--trials", "40"}).code == 0);
  CHECK(run({"verify", "solid", "--trials", "40"}).code == 0);
  CHECK(run({"verify", "onedim", "--trials", "40"}).code == 0);
  CHECK(run({"verify", "thm2", "--trials", "10"}).code == 0);
  CHECK(run({"verify", "thm1", "--grid", "1"}).code == 2);
  CHECK(run({"verify", "thm1", "--trials", "5", "--d", "3"}).code == 2);

  std::string cfg = tmp("sweep.json");
  write_text_file(cfg, R"({"mode":"solid","d":3,"trials":7,"seed":4})");
  auto c = run({"verify", "solid", "--config", cfg, "--json"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["results"]["trials"] == 7);
}

TEST_CASE("intersect subcommand") {
  std::string f = tmp("facet2b.json");
  run({"gen", "facet", "--d", "2", "-o", f});
  auto r = run({"intersect", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("grid: empty") != std::string::npos);
  CHECK(r.out.find("algorithms agree") != std::string::npos);
  std::string g = tmp("pair.json");
  write_text_file(g, R"({"dim":2,"members":[{"kind":"hollow","lo":[0,0],"hi":[1,1]},{"kind":"solid","lo":["1/2",0],"hi":[2,2]}]})");
  auto w = run({"intersect", g, "--alg", "grid", "--json"});
  CHECK(w.code == 0);
  CHECK(json::parse(w.out)["results"]["grid"]["witness"] == json::array({"1/2", 0}));
}

TEST_CASE("render subcommand") {
  std::string f = tmp("facet2c.json");
  run({"gen", "facet", "--d", "2", "-o", f});
  auto r = run({"render", f, "--mark", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<circle") != std::string::npos);
  CHECK(run({"render", f}).out == run({"render", f}).out);
  std::string v = tmp("vertex3b.json");
  run({"gen", "vertex", "--d", "3", "-o", v});
  CHECK(run({"render", v}).code == 2);
}

TEST_CASE("usage errors exit with 2 and help exits with 0") {
  auto u = run({"frobnicate"});
  CHECK(u.code == 2);
  CHECK(u.err.find("Usage") != std::string::npos);
  CHECK(run({"helly", "x.json", "--bogus"}).code == 2);
  CHECK(run({"helly", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"helly", "x.json", "--k", "3", "--defect"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"intersect", tmp("facet2.json"), "--alg", "magic"}).code == 2);
}

TEST_CASE("resource cap from the environment gives exit 3") {
  std::string f = tmp("facet2d.json");
  run({"gen", "facet", "--d", "2", "-o", f});
  setenv("HH_CAND_CAP", "10", 1);
  auto r = run({"intersect", f, "--alg", "grid"});
  unsetenv("HH_CAND_CAP");
  CHECK(r.code == 3);
}
