#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "edgepoly/cli.hpp"
#include "edgepoly/series.hpp"

using edgepoly::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

// Graph files live under the build tree so runs never touch the sources.
std::string graph_file(const std::string& stem, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "edgepoly-cli-tests";
  fs::create_directories(dir);
  fs::path p = dir / (stem + ".graph");
  std::ofstream f(p);
  f << text;
  return p.string();
}

const std::string kRunning = "v0 v1\nv1 v2\nv2 v0\nv0 v3\nv3 v4\nv4 v5\nv5 v6\nv4 v6\n";

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("series text output") {
  std::string path = graph_file("bridged", kRunning);
  Run r = cli({"series", path});
  CHECK(r.code == 0);
  CHECK(r.out == "(1 + t + t^2 + 2*t^3)/(1-t)^7\n");
  CHECK(r.err.empty());

  Run ring = cli({"series", path, "--edge-ring"});
  CHECK(ring.code == 0);
  CHECK(ring.out == "(1 + t + t^2 + t^3 + t^4)/(1-t)^7\n");

  Run grevlex = cli({"series", path, "--order", "grevlex"});
  CHECK(grevlex.out == r.out);
}

TEST_CASE("series json output") {
  std::string path = graph_file("bridged", kRunning);
  Run r = cli({"series", path, "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "ehrhart");
  CHECK(j["order"] == "lex");
  CHECK(j["denominator_power"] == 7);
  CHECK(j["numerator"] == nlohmann::json::array({"1", "1", "1", "2"}));
  CHECK(edgepoly::parse_series(j["series"].get<std::string>()) ==
        edgepoly::parse_series("(1 + t + t^2 + 2*t^3)/(1-t)^7"));

  Run ring = cli({"series", path, "--edge-ring", "--format", "json"});
  CHECK(nlohmann::json::parse(ring.out)["kind"] == "edge-ring");
}

TEST_CASE("poly output") {
  std::string path = graph_file("bridged", kRunning);
  Run r = cli({"poly", path});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1 + (157/60)*m + (47/18)*m^2 + (21/16)*m^3 + (55/144)*m^4"
        " + (17/240)*m^5 + (1/144)*m^6\n");

  Run j = cli({"poly", path, "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["degree"] == 6);
  CHECK(parsed["coefficients"][0] == "1");
  CHECK(parsed["coefficients"][6] == "1/144");
}

TEST_CASE("ideal output, plain and groebner") {
  std::string path = graph_file("bridged", kRunning);
  Run r = cli({"ideal", path});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "e_0*e_2*e_4^2*e_6 - e_1*e_3^2*e_5*e_7\n"
        "θ_{0,1}^2 - e_0*e_1*e_2*e_5*e_6*e_7\n"
        "θ_{0,1}*e_3 - e_0*e_2*e_4*e_6\n"
        "θ_{0,1}*e_4 - e_1*e_3*e_5*e_7\n");

  Run gb = cli({"ideal", path, "--groebner"});
  CHECK(gb.out ==
        "e_0*e_2*e_4^2*e_6 - e_1*e_3^2*e_5*e_7\n"
        "θ_{0,1}*e_4 - e_1*e_3*e_5*e_7\n"
        "θ_{0,1}*e_3 - e_0*e_2*e_4*e_6\n"
        "θ_{0,1}^2 - e_0*e_1*e_2*e_5*e_6*e_7\n");

  Run j = cli({"ideal", path, "--groebner", "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["generators"].size() == 4);
  CHECK(parsed["groebner"].size() == 4);
}

TEST_CASE("verify table") {
  std::string path = graph_file("bridged", kRunning);
  Run r = cli({"verify", path, "--max-dilation", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "m  pipeline  lp  monoid  match\n"
        "0         1   1       1  yes\n"
        "1         8   8       8  yes\n"
        "2        36  36      36  yes\n"
        "all dilations match\n");

  Run j = cli({"verify", path, "--max-dilation", "1", "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["all_match"] == true);
  CHECK(parsed["rows"].size() == 2);
}

TEST_CASE("factor output") {
  Run r = cli({"factor", graph_file("two-squares",
                                    "a b\nb c\nc d\nd a\nb e\ne f\nf c\n")});
  CHECK(r.code == 0);
  CHECK(r.out.find("whole graph: (1 + 2*t + t^2)/(1-t)^5\n") != std::string::npos);
  CHECK(r.out.find("shared-edge factoring at e_1:") != std::string::npos);
  CHECK(r.out.find("equal: yes") != std::string::npos);

  Run j = cli({"factor", graph_file("two-squares",
                                    "a b\nb c\nc d\nd a\nb e\ne f\nf c\n"),
               "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["block_factoring"]["equal"] == true);
  CHECK(parsed["shared_edge_factorings"].size() == 1);
  CHECK(parsed["shared_edge_factorings"][0]["equal"] == true);
}

TEST_CASE("roots output") {
  Run r = cli({"roots", graph_file("bridged", kRunning)});
  CHECK(r.code == 0);
  CHECK(r.out.find("integer roots: -1 -2 -3\n") != std::string::npos);
  CHECK(r.out.find("critical line: not applicable") != std::string::npos);
  CHECK(r.out.find("<= Re <= ") != std::string::npos);
  CHECK(r.out.find(" holds") != std::string::npos);

  Run sq = cli({"roots", graph_file("square", "a b\nb c\nc d\nd a\n")});
  CHECK(sq.out.find("critical line: Re = -1.000000\n") != std::string::npos);
  CHECK(sq.out.find("max deviation from line:") != std::string::npos);
}

TEST_CASE("check-occ wording") {
  Run bad = cli({"check-occ", graph_file("bridged", kRunning)});
  CHECK(bad.code == 0);
  CHECK(bad.out == "odd cycle condition: NOT satisfied; 1 exceptional pair\n");

  Run good = cli({"check-occ", graph_file("square", "a b\nb c\nc d\nd a\n")});
  CHECK(good.out == "odd cycle condition: satisfied\n");

  Run j = cli({"check-occ", graph_file("bridged", kRunning), "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["satisfied"] == false);
  CHECK(parsed["exceptional_pairs"] == nlohmann::json::array({{0, 1}}));
}

TEST_CASE("user errors exit 1 with a prefixed message") {
  Run missing = cli({"series", "/nonexistent/nowhere.graph"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("edgepoly series: cannot read graph file") != std::string::npos);
  CHECK(missing.out.empty());

  Run loop = cli({"series", graph_file("loop", "a a\n")});
  CHECK(loop.code == 1);
  CHECK(loop.err.find("edgepoly series:") != std::string::npos);

  Run disconnected = cli({"verify", graph_file("disc", "a b\nc d\n")});
  CHECK(disconnected.code == 1);

  Run badorder = cli({"series", graph_file("square", "a b\nb c\nc d\nd a\n"),
                      "--order", "sideways"});
  CHECK(badorder.code == 1);

  Run nosub = cli({});
  CHECK(nosub.code == 1);

  Run unknown = cli({"frobnicate", "x.graph"});
  CHECK(unknown.code == 1);
}

TEST_CASE("caps exit 2") {
  std::string path = graph_file("bridged", kRunning);
  // cap values must be positive, so 1 is the tightest parseable budget
  Run spair = cli({"series", path, "--spair-cap", "1"});
  CHECK(spair.code == 2);
  CHECK(spair.err.find("edgepoly series:") != std::string::npos);
  CHECK(spair.err.find("budget") != std::string::npos);

  Run zero = cli({"series", path, "--spair-cap", "0"});
  CHECK(zero.code == 1);  // rejected at parse time, before any computation

  Run moebius = cli({"series", path, "--moebius-cap", "1"});
  CHECK(moebius.code == 2);

  std::string k6 = graph_file("k6", [] {
    std::string t;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        t += "k" + std::to_string(i) + " k" + std::to_string(j) + "\n";
    return t;
  }());
  Run walk = cli({"ideal", k6, "--walk-cap", "5"});
  CHECK(walk.code == 2);

  Run oracle = cli({"verify", path, "--oracle-cap", "10", "--max-dilation", "3"});
  CHECK(oracle.code == 2);
}

TEST_CASE("help exits zero") {
  Run top = cli({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("series") != std::string::npos);
  CHECK(top.out.find("check-occ") != std::string::npos);

  Run sub = cli({"series", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--edge-ring") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  std::string path = graph_file("bridged", kRunning);
  for (const char* sub : {"series", "poly", "ideal", "verify", "factor",
                          "roots", "check-occ"}) {
    for (const char* format : {"text", "json"}) {
      CAPTURE(sub);
      CAPTURE(format);
      Run a = cli({sub, path, "--format", format});
      Run b = cli({sub, path, "--format", format});
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
      if (std::string(format) == "json") {
        auto parsed = nlohmann::json::parse(a.out, nullptr, false);
        CHECK_FALSE(parsed.is_discarded());
      }
    }
  }
}

TEST_SUITE_END();
