// Copyright 2026 The svpnd Authors
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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "svpnd/cli.hpp"
#include "svpnd/io.hpp"

using namespace svpnd;
using namespace svpnd::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("svpnd_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Json& j) { return write_text(name, j.dump(2)); }
  std::string write_text(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

Workspace& ws() {
  static Workspace w;
  return w;
}

std::string c4_file() { return ws().write("c4.json", instance_to_json(unit_cycle(4))); }
std::string k4_file() { return ws().write("k4.json", instance_to_json(complete(4))); }

}  // namespace

TEST_CASE("solve-ring on C4") {
  Run r = run({"solve-ring", "--instance", c4_file()});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["cost"] == "4");
  CHECK(r.json()["tree_edges"].size() == 3);
  CHECK(r.json()["certified"] == "heuristic");
  Run o = run({"solve-ring", "--instance", c4_file(), "--oracle", "--source", "2"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.json()["certified"] == "exhaustive");
}

TEST_CASE("solve-ring with general bounds") {
  std::string f = ws().write("c3b.json", instance_to_json(cycle({2, 3, 5}, {2, 1, 1})));
  Run r = run({"solve-ring", "--instance", f, "--oracle"});
  CHECK(r.code == cli::kExitOk);
  Instance c3 = cycle({2, 3, 5}, {2, 1, 1});
  CHECK(r.json()["cost"] == tree_cost(c3, exhaustive_tree_search(c3)).to_string());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("solve-ring rejects non-rings") {
  Run r = run({"solve-ring", "--instance", k4_file()});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("NotARing") != std::string::npos);
}

TEST_CASE("solve-tree") {
  Run r = run({"solve-tree", "--instance", k4_file(), "--oracle"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["cost"] == "3");
  CHECK(r.json()["certified"] == "exhaustive");
  Run dot = run({"solve-tree", "--instance", k4_file(), "--format", "dot"});
  CHECK(dot.code == cli::kExitOk);
  CHECK(dot.out.rfind("graph svpnd {", 0) == 0);
  Run budget = run({"solve-tree", "--instance", ws().write("k6.json", instance_to_json(complete(6))),
                    "--oracle", "--budget", "10"});
  CHECK(budget.code == cli::kExitBudget);
}

TEST_CASE("pr-cost and pr-brute") {
  Json sys = Json::parse(R"({"source":"0","paths":{"1":["0","1"],"2":["0","1","2"],"3":["0","1","2","3"]}})");
  Run r = run({"pr-cost", "--instance", c4_file(), "--solution", ws().write("sys.json", sys)});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["cost"] == "4");
  CHECK(r.json()["y"]["1|2"] == 2);
  CHECK(r.json()["n"]["0|1"] == 3);
  CHECK(r.json()["is_tree"] == true);

  Json bad = sys;
  bad["paths"]["3"] = Json::array({"0", "2", "3"});
  Run b = run({"pr-cost", "--instance", c4_file(), "--solution", ws().write("bad_sys.json", bad)});
  CHECK(b.code == cli::kExitUsage);
  CHECK(b.err.find("InvalidPath") != std::string::npos);

  Run brute = run({"pr-brute", "--instance", c4_file(), "--source", "1"});
  CHECK(brute.code == cli::kExitOk);
  CHECK(brute.json()["cost"] == "4");
  CHECK(brute.json()["source"] == "1");
  Run trails = run({"pr-brute", "--instance", k4_file(), "--trails"});
  CHECK(trails.code == cli::kExitOk);
  Run over = run({"pr-brute", "--instance", k4_file(), "--budget", "3"});
  CHECK(over.code == cli::kExitBudget);
  Run not_terminal = run({"pr-brute", "--instance", c4_file(), "--source", "9"});
  CHECK(not_terminal.code == cli::kExitUsage);
}

TEST_CASE("reduce then lift") {
  Instance c3 = cycle({2, 3, 5}, {2, 1, 1});
  std::string f = ws().write("c3r.json", instance_to_json(c3));
  Run red = run({"reduce", "--instance", f});
  REQUIRE(red.code == cli::kExitOk);
  Json map = red.json();
  CHECK(map["variant"] == "subdivision");
  ReductionMap parsed = reduction_from_json(map);
  CHECK(is_ring(parsed.reduced.network()));

  // A reduced tree with the sub-terminals as separate leaves.
  const Network& net = parsed.reduced.network();
  TreeSolution leaves = tree_capacities(parsed.reduced, edges_of(net, {{0, 3}, {4, 1}, {1, 2}, {0, 2}}));
  std::string mf = ws().write("map.json", map);
  std::string tf = ws().write("reduced_tree.json", tree_solution_to_json(parsed.reduced, leaves));
  Run lift = run({"lift", "--reduction", mf, "--solution", tf});
  CHECK(lift.code == cli::kExitOk);
  Rational lifted = Rational::parse(lift.json()["cost"].get<std::string>());
  CHECK(lifted <= tree_cost(parsed.reduced, leaves));
  CHECK(lifted >= tree_cost(c3, exhaustive_tree_search(c3)));

  Run star = run({"reduce", "--instance", f, "--variant", "star"});
  CHECK(star.json()["variant"] == "star");
  Run bad = run({"reduce", "--instance", f, "--variant", "hexagon"});
  CHECK(bad.code == cli::kExitUsage);
}

TEST_CASE("check-feasible") {
  EightTree fx = eight_tree();
  std::string inst = ws().write("eight_tree.json", instance_to_json(fx.instance));
  TreeSolution t = tree_capacities(fx.instance, fx.tree);
  VpnSolution v = to_vpn_solution(fx.instance, t);
  Run ok = run({"check-feasible", "--instance", inst, "--solution",
                ws().write("good.json", vpn_solution_to_json(fx.instance, v))});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.json()["feasible"] == true);

  Run tree = run({"check-feasible", "--instance", inst, "--solution",
                  ws().write("tree.json", tree_solution_to_json(fx.instance, t))});
  CHECK(tree.code == cli::kExitOk);

  v.capacities[fx.e] = 2;
  Run bad = run({"check-feasible", "--instance", inst, "--solution",
                 ws().write("bad.json", vpn_solution_to_json(fx.instance, v))});
  CHECK(bad.code == cli::kExitViolation);
  CHECK(bad.json()["violations"].size() == 1);
  CHECK(bad.json()["violations"][0]["load"] == "3");
  CHECK_FALSE(bad.err.empty());

  v.paths.erase({0, 1});
  Run missing = run({"check-feasible", "--instance", inst, "--solution",
                     ws().write("missing.json", vpn_solution_to_json(fx.instance, v))});
  CHECK(missing.code == cli::kExitUsage);
  CHECK(missing.err.find("MissingPairPath") != std::string::npos);
}

TEST_CASE("lower-bound") {
  Instance c4 = unit_cycle(4);
  VpnSolution v = to_vpn_solution(c4, optimal_tree_search(c4));
  Run r = run({"lower-bound", "--instance", c4_file(), "--solution",
               ws().write("c4sol.json", vpn_solution_to_json(c4, v))});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["bound"] == "4");
  v.capacities.assign(4, Rational(0));
  Run inf = run({"lower-bound", "--instance", c4_file(), "--solution",
                 ws().write("c4zero.json", vpn_solution_to_json(c4, v))});
  CHECK(inf.code == cli::kExitViolation);
}

TEST_CASE("verify-chain") {
  Run r = run({"verify-chain", "--instance", k4_file(), "--budget", "100000"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["chain_holds"] == true);
  Run over = run({"verify-chain", "--instance", k4_file(), "--budget", "10"});
  CHECK(over.code == cli::kExitBudget);
  CHECK(over.out.empty());
  Run bounds = run({"verify-chain", "--instance", ws().write("c3v.json", instance_to_json(cycle({1, 2, 3}, {2, 1, 1})))});
  CHECK(bounds.code == cli::kExitOk);
}

TEST_CASE("experiment") {
  Run r = run({"experiment", "--family", "ring", "--min-size", "3", "--max-size", "4", "--count", "3",
               "--seed", "7", "--extra-nodes", "1"});
  CHECK(r.code == cli::kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int records = 0;
  Json last;
  while (std::getline(lines, line)) {
    last = Json::parse(line);
    if (!last.contains("summary")) ++records;
  }
  CHECK(records == 6);
  CHECK(last["summary"]["instances"] == 6);
  CHECK(last["summary"]["ok"] == 6);
  CHECK(r.out == run({"experiment", "--family", "ring", "--min-size", "3", "--max-size", "4", "--count",
                      "3", "--seed", "7", "--extra-nodes", "1"}).out);

  std::string cfg = ws().write("cfg.json", Json::parse(R"({"family":"complete","min_size":3,"max_size":3,
                                                           "instances_per_size":2,"bound_max":2})"));
  Run c = run({"experiment", "--config", cfg});
  CHECK(c.code == cli::kExitOk);
  Run bad = run({"experiment", "--family", "torus"});
  CHECK(bad.code == cli::kExitUsage);
  Run tight = run({"experiment", "--family", "complete", "--min-size", "5", "--max-size", "5", "--count",
                   "1", "--budget", "10"});
  CHECK(tight.code == cli::kExitOk);
  CHECK(tight.out.find("budget_exceeded") != std::string::npos);
}

TEST_CASE("export-dot") {
  Run plain = run({"export-dot", "--instance", c4_file()});
  CHECK(plain.code == cli::kExitOk);
  CHECK(plain.out.find("label=\"1\"") != std::string::npos);
  Instance c4 = unit_cycle(4);
  TreeSolution t = tree_capacities(c4, edges_of(c4.network(), {{0, 1}, {1, 2}, {2, 3}}));
  Run tree = run({"export-dot", "--instance", c4_file(), "--solution",
                  ws().write("c4tree.json", tree_solution_to_json(c4, t))});
  CHECK(tree.out.find("style=bold") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"solve-tree"}).code == cli::kExitUsage);
  CHECK(run({"solve-tree", "--instance", "/nonexistent.json"}).code == cli::kExitUsage);
  CHECK(run({"solve-tree", "--instance", ws().write_text("broken.json", "{")}).code == cli::kExitUsage);
  Run invalid = run({"solve-tree", "--instance",
                     ws().write_text("neg.json", R"({"nodes":["a","b","c","d"],"edges":[{"u":"a","v":"b","cost":"-1"},
                        {"u":"c","v":"d","cost":"1"}],"terminals":[{"node":"a"}]})")});
  CHECK(invalid.code == cli::kExitUsage);
  CHECK(invalid.err.find("NegativeCost") != std::string::npos);
  CHECK(invalid.err.find("DisconnectedGraph") != std::string::npos);
  CHECK(invalid.err.find("TooFewTerminals") != std::string::npos);
  Run help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("verify-chain") != std::string::npos);
}

#ifdef SVPND_CLI_PATH
TEST_CASE("the binary reports exit codes") {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(SVPND_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("solve-ring --instance " + c4_file()) == 0);
  CHECK(status("solve-ring") == 2);
  CHECK(status("verify-chain --instance " + k4_file() + " --budget 5") == 3);
  EightTree fx = eight_tree();
  VpnSolution v = to_vpn_solution(fx.instance, tree_capacities(fx.instance, fx.tree));
  v.capacities[fx.e] = 0;
  CHECK(status("check-feasible --instance " + ws().write("eightb.json", instance_to_json(fx.instance)) +
               " --solution " + ws().write("eightbad.json", vpn_solution_to_json(fx.instance, v))) == 1);
}
#endif
