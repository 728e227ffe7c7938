// Copyright 2026 The recallnet Authors
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

// Drives the built executable end to end.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "recallnet/config.hpp"
#include "recallnet/homophily.hpp"
#include "recallnet/io.hpp"

using namespace recallnet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(RECALLNET_CLI_PATH) + " " + args + " 2>&1";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.output.append(buf.data(), n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("recallnet_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kSmall =
    "[topology]\nkind = modular_sbm\nn = 40\n[experiment]\nsteps = 4\nruns = 2\n";

}  // namespace

TEST_CASE("missing config exits 2 and names the path") {
  auto o = run_cli("run --config /nonexistent/abc.ini --out /tmp/recallnet_cli_never");
  CHECK(o.code == 2);
  CHECK(o.output.find("/nonexistent/abc.ini") != std::string::npos);
  CHECK_FALSE(fs::exists("/tmp/recallnet_cli_never/runs.csv"));
}

TEST_CASE("invalid config exits 1 and names the key") {
  fs::path dir = scratch("invalid");
  std::ofstream(dir / "bad.ini") << "[topology]\nkind = convex\n[decay]\ndelta = 1.3\n";
  auto o = run_cli("run --config " + (dir / "bad.ini").string() + " --out " + (dir / "out").string());
  CHECK(o.code == 1);
  CHECK(o.output.find("decay.delta") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "out" / "runs.csv"));
  CHECK(run_cli("frobnicate").code == 1);
}

TEST_CASE("run with a fixed seed is byte-identical") {
  fs::path dir = scratch("seed");
  std::ofstream(dir / "c.ini") << kSmall;
  const std::string base = "run --config " + (dir / "c.ini").string() + " --seed 7 --out ";
  REQUIRE(run_cli(base + (dir / "a").string()).code == 0);
  REQUIRE(run_cli(base + (dir / "b").string() + " --workers 3").code == 0);
  for (const char* f : {"runs.csv", "vor_summary.csv", "aggregate.csv", "config.ini"}) {
    CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
  }
  auto manifest = nlohmann::json::parse(slurp(dir / "a" / "manifest.json"));
  CHECK(manifest["base_seed"] == 7);
  CHECK(manifest["seeds"].size() == 2);
  // Re-executing from the recorded config reproduces the data.
  REQUIRE(run_cli("run --config " + (dir / "a" / "config.ini").string() + " --out " +
                  (dir / "c").string()).code == 0);
  CHECK(slurp(dir / "a" / "runs.csv") == slurp(dir / "c" / "runs.csv"));
  // No temporaries remain.
  for (const auto& e : fs::directory_iterator(dir / "a")) {
    CHECK(e.path().filename().string().find(".partial") == std::string::npos);
  }
}

TEST_CASE("default sweep produces a 16-cell aggregate") {
  fs::path dir = scratch("sweep");
  std::ofstream(dir / "c.ini") << "[topology]\nkind = sparse_er\nn = 20\n[experiment]\nsteps = 2\nruns = 1\n";
  auto o = run_cli("sweep --config " + (dir / "c.ini").string() + " --out " + (dir / "o").string());
  REQUIRE(o.code == 0);
  CsvTable agg = read_csv(dir / "o" / "aggregate.csv");
  CHECK(agg.rows.size() == 16);
  CHECK(fs::exists(dir / "o" / "manifest.json"));
  CHECK(read_csv(dir / "o" / "vor_summary.csv").rows.size() == 16);

  auto t = run_cli("tables --in " + (dir / "o").string() + " --out " + (dir / "t").string());
  CHECK(t.code == 0);
  CHECK(read_csv(dir / "t" / "table3.csv").rows.size() == 4);
  CHECK(read_csv(dir / "t" / "table2.csv").rows.size() == 3);
}

TEST_CASE("homophily subcommand agrees with the library") {
  fs::path dir = scratch("homophily");
  const std::string edges = "0 0 1 0\n1 0 1 2\n1 1 2 2\n2 1 1 5\n";
  std::ofstream(dir / "b.txt") << edges;
  auto o = run_cli("homophily --input " + (dir / "b.txt").string() +
                   " --delta 0.8 --similarity ones --out " + (dir / "h.json").string());
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(slurp(dir / "h.json"));
  std::istringstream in(edges);
  BipartiteIncidence b = read_bipartite_edges(in);
  SimilarityMatrix x1(3, SimilarityMetric::kCosine);
  for (NodeId i = 0; i < 3; ++i)
    for (NodeId k = i + 1; k < 3; ++k) x1.set(i, k, 1.0);
  SimilarityMatrix x2(2, SimilarityMetric::kCosine);
  x2.set(0, 1, 1.0);
  CHECK(j["first_mode"].get<double>() ==
        doctest::Approx(first_mode_homophily(b, x1, DecaySpec::exponential(0.8))));
  CHECK(j["second_mode"].get<double>() ==
        doctest::Approx(second_mode_homophily(b, x2, DecaySpec::exponential(0.8))));
  CHECK(run_cli("homophily --input " + (dir / "missing.txt").string()).code == 2);
}
