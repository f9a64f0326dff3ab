// Copyright 2026 The pathpack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "pathpack/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pathpack::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Report text without the timing line.
std::string stable(const std::string& report) {
  std::istringstream in(report);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("wall_time_ms:", 0) == 0) continue;
    out += line + '\n';
  }
  return out;
}

std::string field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "<missing>";
}

std::string golden(const std::string& name) {
  return oracle::slurp(std::string(PATHPACK_GOLDEN_DIR) + "/cli/" + name);
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pathpack_cli_" + name);
}

}  // namespace

TEST_CASE("golden reports") {
  const std::pair<std::vector<std::string>, const char*> cases[] = {
      {{"solve", "cycle:6"}, "solve_cycle6.txt"},
      {{"color", "product", "complete", "n=4", "l=2", "t=3"}, "color_k4.txt"},
      {{"recognize", "caterpillar", "6:2,1,0,3,0,1"}, "recognize_g4.txt"},
      {{"recognize", "caterpillar", "4:1,1,1,1"}, "recognize_more.txt"},
      {{"crosscheck", "--l-max", "4", "--m-max", "1"}, "crosscheck_4_1.txt"},
      {{"probe", "c8", "l=4", "t=1..2"}, "probe_c8.txt"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(file);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(stable(r.out) == golden(file));
    CHECK(stable(run(args).out) == stable(r.out));
  }
}

TEST_CASE("solve") {
  CHECK(field(run({"solve", "path:9"}).out, "chi_p") == "3");
  const Run limited = run({"solve", "product", "cycle", "n=8", "l=3", "t=5", "--node-limit", "10"});
  CHECK(limited.code == 0);
  CHECK(field(limited.out, "result") == "limit-hit");
  CHECK(field(limited.out, "status") == "limit-hit");
  CHECK(field(limited.out, "chi_p") == "<missing>");
  CHECK(field(run({"solve", "cycle:5", "--k-max", "3"}).out, "result") == "exceeded");
  // The default node limit is not shared with other subcommands.
  const Run big = run({"solve", "corona", "path:12", "p=4"});
  CHECK(field(big.out, "chi_p") == "6");
}

TEST_CASE("build") {
  const auto g = tmp("g.txt");
  const Run r = run({"build", "product", "cycle", "n=4", "l=2", "t=5", "-o", g.string()});
  CHECK(r.code == 0);
  CHECK(field(r.out, "vertices") == "20");
  CHECK(oracle::slurp(g).rfind("p 20 24\n", 0) == 0);
  CHECK(run({"build", "caterpillar", "3:5,2,1"}).out.rfind("p 11 10\n", 0) == 0);
  CHECK(run({"build", "corona", "path:5", "p=2"}).out.rfind("p 15 14\n", 0) == 0);
  std::filesystem::remove(g);
}

TEST_CASE("verify") {
  const auto g = tmp("k4.txt");
  const auto c = tmp("k4.col");
  REQUIRE(run({"build", "product", "complete", "n=4", "l=2", "t=3", "-o", g.string()}).code == 0);
  const Run ok = run({"verify", g.string(), std::string(PATHPACK_GOLDEN_DIR) + "/P6_K4_l2.col"});
  CHECK(ok.code == 0);
  CHECK(field(ok.out, "valid") == "yes");

  std::ofstream(c) << "k 2\nv 1 1\nv 2 1\nv 3 2\nv 4 1\nv 5 2\nv 6 1\n"
                      "v 7 1\nv 8 1\nv 9 1\nv 10 1\nv 11 1\nv 12 1\n";
  const Run bad = run({"verify", g.string(), c.string()});
  CHECK(bad.code == 1);
  CHECK(field(bad.out, "status") == "invalid");
  CHECK(field(bad.out, "valid") == "no");
  std::filesystem::remove(g);
  std::filesystem::remove(c);
}

TEST_CASE("color writes a coloring file") {
  const auto c = tmp("c.col");
  const Run r = run({"color", "product", "cycle", "n=8", "l=3", "t=5", "-o", c.string()});
  CHECK(r.code == 0);
  CHECK(oracle::read_colors(c) ==
        oracle::read_colors(std::string(PATHPACK_GOLDEN_DIR) + "/P15_C8_l3.col"));
  CHECK(field(r.out, "route") == "direct");
  CHECK(field(run({"color", "product", "cycle", "n=8", "l=7", "t=2"}).out, "route") ==
        "cycle-transform");
  std::filesystem::remove(c);
  const Run unsupported = run({"color", "product", "complete", "n=6", "l=2", "t=2"});
  CHECK(unsupported.code == 2);
  CHECK(unsupported.err.find("unsupported") != std::string::npos);
}

TEST_CASE("recognize a tree file") {
  const auto g = tmp("tree.txt");
  std::ofstream(g) << "p 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n";
  const Run r = run({"recognize", g.string()});
  CHECK(r.code == 0);
  CHECK(field(r.out, "caterpillar") == "C(4;1,0,0,1)");
  std::ofstream(g) << "p 10 9\ne 1 2\ne 2 3\ne 3 4\ne 1 5\ne 5 6\ne 6 7\ne 1 8\ne 8 9\ne 9 10\n";
  CHECK(field(run({"recognize", g.string()}).out, "status") == "not-caterpillar");
  std::filesystem::remove(g);
}

TEST_CASE("ilp") {
  CHECK(run({"ilp", "path:2", "--k", "2"}).out == oracle::slurp(PATHPACK_GOLDEN_DIR "/P2_k2.lp"));
  const Run def = run({"ilp", "cycle:5", "-o", tmp("c5.lp").string()});
  CHECK(field(def.out, "k") == "4");
  CHECK(field(def.out, "variables") == "21");

  const auto sol = tmp("c5.sol");
  std::ofstream(sol) << "x_1_1 1\nx_2_2 1\nx_3_1 1\nx_4_3 1\nx_5_4 1\nz 4\n";
  const Run read = run({"ilp", "cycle:5", "--k", "4", "--solution", sol.string()});
  CHECK(read.code == 0);
  CHECK(field(read.out, "valid") == "yes");
  std::ofstream(sol) << "x_1_1 1\nx_2_1 1\nx_3_2 1\nx_4_3 1\nx_5_4 1\nz 4\n";
  CHECK(run({"ilp", "cycle:5", "--k", "4", "--solution", sol.string()}).code == 1);
  std::filesystem::remove(sol);
  std::filesystem::remove(tmp("c5.lp"));
}

TEST_CASE("probe reference bounds") {
  const Run r = run({"probe", "k6", "t<=2", "--node-limit", "20000"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "reference_bound") == "22");
  CHECK(field(r.out, "rows") == "10");
  const Run cut = run({"probe", "k6", "t<=2", "--budget", "5"});
  CHECK(field(cut.out, "status") == "partial");
}

TEST_CASE("tables with a small exact cap") {
  const Run r = run({"tables", "--max-vertices", "16", "--node-limit", "1000000"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "equality_failed") == "0");
  CHECK(field(r.out, "bound_failed") == "0");
  CHECK(field(r.out, "status") == "ok");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run bad = run({"solve", "foo:3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("forms:") != std::string::npos);
  CHECK(run({"solve", "product", "cycle", "n=4", "l=2"}).code == 2);
  CHECK(run({"probe", "t<=3"}).code == 2);
  CHECK(run({"solve", "cycle:5", "--seed", "17"}).code == 0);
}
