// Copyright 2026 The hamcheck Authors
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

#include "hamcheck/cli.hpp"
#include "hamcheck/fixed_point.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hamcheck");
  std::ostringstream out;
  std::ostringstream err;
  const int code = hamcheck::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("hamcheck_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& body) const {
    const auto p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string doc(int n, const std::vector<std::vector<int>>& points) {
  json pts = json::array();
  for (const auto& p : points) pts.push_back({{"weights", p}});
  return json{{"n", n}, {"fixed_points", pts}}.dump();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("check exit codes follow the verdict") {
  TempDir dir;
  CHECK(run({"check", dir.write("s2.json", doc(1, {{1}, {-1}}))}).code == 0);
  CHECK(run({"check", dir.write("cp2.json", doc(2, {{1, 2}, {-1, 1}, {-2, -1}}))}).code == 0);
  CHECK(run({"check", dir.write("pair.json", doc(3, {{-3, 1, 2}, {-1, -2, 3}}))}).code == 1);
  CHECK(run({"check", dir.write("bad.json", doc(2, {{1, 2}, {1, -2}}))}).code == 2);
  CHECK(run({"check", dir.write("one.json", doc(1, {{1}}))}).code == 2);
}

TEST_CASE("malformed input exits 64") {
  TempDir dir;
  const auto zero = run({"check", dir.write("z.json", doc(2, {{1, 0}}))});
  CHECK(zero.code == hamcheck::cli::kInputError);
  CHECK(zero.err.find("zero weight at point 0, slot 1") != std::string::npos);
  CHECK(run({"check", dir.write("m.json", doc(2, {{1}}))}).code == 64);
  CHECK(run({"check", dir.write("j.json", "{not json")}).code == 64);
  CHECK(run({"check", dir.file("missing.json")}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"check", dir.write("f.json", doc(1, {{1}, {-1}})), "--format", "xml"}).code == 64);
}

TEST_CASE("json and text reports agree") {
  TempDir dir;
  const auto path = dir.write("pair.json", doc(3, {{-3, 1, 2}, {-1, -2, 3}}));
  const auto j = run({"check", path, "--format", "json"});
  const auto t = run({"check", path});
  REQUIRE(j.code == t.code);
  const auto report = json::parse(j.out).at("report");
  CHECK(report.at("chi") == json::array({0, -1, 1, 0}));
  CHECK(report.at("N") == json::array({0, 1, 1, 0}));
  CHECK(report.at("verdict") == "non-hamiltonian-candidate");
  CHECK(t.out.find("verdict: non-hamiltonian-candidate") != std::string::npos);
  CHECK(t.out.find("chi:  [0, -1, 1, 0]") != std::string::npos);
  for (const auto& c : report.at("criteria")) {
    CHECK(t.out.find(c.at("name").get<std::string>()) != std::string::npos);
  }
  // Timing goes to stderr so the JSON is reproducible.
  CHECK(run({"check", path, "--format", "json"}).out == j.out);
  CHECK(j.err.find("time:") != std::string::npos);
}

TEST_CASE("check --order-oracle") {
  TempDir dir;
  const auto path = dir.write("cp2.json", doc(2, {{1, 2}, {-1, 1}, {-2, -1}}));
  const auto r = run({"check", path, "--format", "json", "--order-oracle", "8"});
  CHECK(r.code == 0);
  const auto oracle = json::parse(r.out).at("report").at("oracle");
  CHECK(oracle.at("order") == 8);
  for (const auto& d : oracle.at("degrees")) CHECK(d.at("status") == "agree");
  CHECK(run({"check", path, "--order-oracle", "1"}).code == 0);
}

TEST_CASE("criteria --only") {
  TempDir dir;
  const auto path = dir.write("pair.json", doc(3, {{-3, 1, 2}, {-1, -2, 3}}));
  const auto r = run({"criteria", path, "--only", "godinho_condition", "--format", "json"});
  CHECK(r.code == 0);
  const auto list = json::parse(r.out).at("report").at("criteria");
  REQUIRE(list.size() == 1);
  CHECK(list[0].at("name") == "godinho_condition");
  CHECK(list[0].at("outcome") == "fails");
  CHECK(list[0].at("witness").at("type") == "triple");
  CHECK(run({"criteria", path, "--only", "nope"}).code == 64);
}

TEST_CASE("search output round-trips through check") {
  TempDir dir;
  const auto r = run({"search", "--dim", "6", "--points", "2", "--max-weight", "5", "--mode",
                      "non-hamiltonian", "--threads", "1"});
  REQUIRE(r.code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 7);
  const auto summary = json::parse(out.back());
  CHECK(summary.at("stats").at("survivors") == 6);
  CHECK(summary.at("search").at("mode") == "non-hamiltonian");
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    const auto survivor = json::parse(out[k]);
    CHECK(survivor.at("report").at("verdict") == "non-hamiltonian-candidate");
    const auto path = dir.write("s" + std::to_string(k) + ".json", out[k]);
    const auto again = run({"check", path, "--format", "json"});
    CHECK(again.code == 1);
    CHECK(json::parse(again.out) == survivor);
  }

  const auto file = dir.file("out.jsonl");
  const auto to_file = run({"search", "--dim", "6", "--points", "2", "--max-weight", "5",
                            "--mode", "non-hamiltonian", "--out", file, "--threads", "1"});
  CHECK(to_file.out.empty());
  std::ifstream in(file);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == r.out);
}

TEST_CASE("search argument errors") {
  CHECK(run({"search", "--dim", "3", "--points", "2", "--max-weight", "2"}).code == 64);
  CHECK(run({"search", "--dim", "0", "--points", "2", "--max-weight", "2"}).code == 64);
  CHECK(run({"search", "--dim", "4", "--points", "0", "--max-weight", "2"}).code == 64);
  CHECK(run({"search", "--dim", "4", "--points", "2", "--max-weight", "2", "--filters", "x"})
            .code == 64);
  const auto big = run({"search", "--dim", "8", "--points", "5", "--max-weight", "9",
                        "--ceiling", "1000"});
  CHECK(big.code == hamcheck::cli::kCeilingExceeded);
  CHECK(big.out.empty());
  CHECK(big.err.find("64101026474510697") != std::string::npos);
}
