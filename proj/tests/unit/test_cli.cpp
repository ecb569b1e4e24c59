// Copyright 2026 the lpbench authors
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

#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary through the shell, capturing stdout and the
// real exit code. stderr is folded in only when asked, so JSON output
// stays parseable.
RunResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
  const char* bin = std::getenv("LPBENCH_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "LPBENCH_BIN must point at the CLI binary");
  const std::string cmd = env_prefix + "\"" + bin + "\" " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string write_payload(const std::string& name, const json& payload) {
  const std::string path = "/tmp/lpbench_cli_" + name + ".json";
  std::ofstream out(path);
  out << payload.dump();
  REQUIRE(out.good());
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Timing is the one permitted difference between identical runs.
std::string without_elapsed(const std::string& text) {
  std::string out;
  for (const auto& line : lines_of(text)) {
    if (line.find("elapsed") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("cli version and help exit cleanly") {
  CHECK(run_cli("--version").exit_code == 0);
  const auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("norm") != std::string::npos);
  CHECK(help.out.find("fuzz") != std::string::npos);
}

TEST_CASE("norm subcommand computes weighted norms") {
  const auto path = write_payload(
      "norm", json{{"weights", {1.0, 1.0}}, {"values", {3.0, 4.0}}, {"p", 2.0}});
  const auto res = run_cli("norm " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(json::parse(res.out).at("value") == doctest::Approx(5.0));

  // Vector-valued payloads nest their values and carry a codomain.
  const auto vec = write_payload(
      "norm_vec",
      json{{"weights", {1.0, 1.0}},
           {"values", {{3.0, 4.0}, {0.0, 0.0}}},
           {"codomain",
            json{{"dim", 2u}, {"norm", json{{"kind", "lp"}, {"p", 2.0}}}}},
           {"p", "inf"}});
  const auto vres = run_cli("norm " + vec);
  REQUIRE(vres.exit_code == 0);
  CHECK(json::parse(vres.out).at("value") == doctest::Approx(5.0));
}

TEST_CASE("check emits one certificate line per instance") {
  const json holder{{"name", "ineq.holder"},
                    {"field", "real"},
                    {"f1", json{{"weights", {1.0, 1.0}}, {"values", {1.0, 2.0}}}},
                    {"f2", json{{"weights", {1.0, 1.0}}, {"values", {2.0, 1.0}}}},
                    {"p", 2.0},
                    {"q", 2.0}};
  const auto single = write_payload("check_one", holder);
  const auto res = run_cli("check ineq.holder " + single);
  REQUIRE(res.exit_code == 0);
  const auto out = json::parse(res.out);
  CHECK(out.at("lhs") == doctest::Approx(4.0));
  CHECK(out.at("status") == "holds");

  const auto batch = write_payload("check_two", json::array({holder, holder}));
  const auto bres = run_cli("check ineq.holder " + batch);
  REQUIRE(bres.exit_code == 0);
  const auto lines = lines_of(bres.out);
  REQUIRE(lines.size() == 2);
  CHECK(json::parse(lines[0]) == json::parse(lines[1]));
}

TEST_CASE("check reports violations with exit code 2") {
  const json literal{
      {"name", "ineq.interpolation_paper_literal"},
      {"field", "real"},
      {"f", json{{"weights", {1.0}}, {"values", {0.5}}}},
      {"p", 2.0},
      {"q", 2.0}};
  const auto path = write_payload("check_violated", literal);
  const auto res = run_cli("check ineq.interpolation_paper_literal " + path);
  CHECK(res.exit_code == 2);
  const auto cert = json::parse(res.out);
  CHECK(cert.at("status") == "violated");
  CHECK(cert.at("lhs") == doctest::Approx(0.5));
  CHECK(cert.at("rhs") == doctest::Approx(0.0625));
}

TEST_CASE("malformed input maps to the usage exit code") {
  const auto garbled = "/tmp/lpbench_cli_garbled.json";
  {
    std::ofstream out(garbled);
    out << "{not json";
  }
  const auto res = run_cli(std::string("norm ") + garbled, true);
  CHECK(res.exit_code == 64);
  CHECK(res.out.find("payload") != std::string::npos);

  // Unknown property names and bad flags are usage errors too.
  const auto inst = write_payload("check_unknown", json{{"f", 1.0}});
  CHECK(run_cli("check no.such.property " + inst).exit_code == 64);
  CHECK(run_cli("fuzz --trials 0", true).exit_code == 64);

  // Missing fields surface the full payload path.
  const auto missing =
      write_payload("norm_missing", json{{"weights", {1.0}}});
  const auto mres = run_cli("norm " + missing, true);
  CHECK(mres.exit_code == 64);
  CHECK(mres.out.find("payload.") != std::string::npos);
}

TEST_CASE("opnorm computes and can insist on exactness") {
  const json identity{{"domain", json{{"weights", {1.0, 1.0}}}},
                      {"kernel", {1.0, 0.0, 0.0, 1.0}},
                      {"r", 2.0},
                      {"s", 2.0}};
  const auto path = write_payload("opnorm_id", identity);
  const auto res = run_cli("opnorm " + path);
  REQUIRE(res.exit_code == 0);
  const auto out = json::parse(res.out);
  CHECK(out.at("value") == doctest::Approx(1.0));
  CHECK(out.at("kind") == "exact");

  // A rotation on l2 -> l2 only gets an ascent lower bound.
  const double c = 1.0 / std::sqrt(2.0);
  const json rotation{{"domain", json{{"weights", {1.0, 1.0}}}},
                      {"kernel", {c, -c, c, c}},
                      {"r", 2.0},
                      {"s", 2.0}};
  const auto rpath = write_payload("opnorm_rot", rotation);
  CHECK(run_cli("opnorm " + rpath).exit_code == 0);
  CHECK(run_cli("opnorm --exact-only " + rpath, true).exit_code == 65);
}

TEST_CASE("tracenorm reports the euclidean trace norm exactly") {
  const json payload{
      {"space", json{{"dim", 2u}, {"norm", json{{"kind", "lp"}, {"p", 2.0}}}}},
      {"matrix", {3.0, 0.0, 0.0, 4.0}},
      {"p", 1.0}};
  const auto path = write_payload("tracenorm_diag", payload);
  const auto res = run_cli("tracenorm " + path);
  REQUIRE(res.exit_code == 0);
  const auto out = json::parse(res.out);
  CHECK(out.at("value") == doctest::Approx(7.0));
  CHECK(out.at("kind") == "exact_euclidean");
}

TEST_CASE("kernel subcommand applies and composes operators") {
  const json swap{{"op", "apply"},
                  {"domain", json{{"weights", {1.0, 1.0}}}},
                  {"kernel", {0.0, 1.0, 1.0, 0.0}},
                  {"f", json{{"weights", {1.0, 1.0}}, {"values", {3.0, 4.0}}}}};
  const auto path = write_payload("kernel_swap", swap);
  const auto res = run_cli("kernel " + path);
  REQUIRE(res.exit_code == 0);
  const auto out = json::parse(res.out);
  CHECK(out.at("values") == json::array({4.0, 3.0}));
}

TEST_CASE("fuzz passes on a healthy corpus and honors the seed env") {
  const auto a = run_cli("fuzz --trials 5 --seed 42 --n-max 5");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out.find("suite PASS") != std::string::npos);

  const auto b = run_cli("fuzz --trials 5 --n-max 5", false,
                         "LPBENCH_SEED=42 ");
  REQUIRE(b.exit_code == 0);
  CHECK(without_elapsed(a.out) == without_elapsed(b.out));

  const auto c = run_cli("fuzz --trials 5 --seed 43 --n-max 5");
  CHECK(without_elapsed(a.out) != without_elapsed(c.out));
}

TEST_CASE("fuzz surfaces the refutable interpolation mode") {
  const auto res = run_cli(
      "fuzz --trials 1 --seed 7 --paper-literal-interpolation "
      "--only interpolation_paper_literal");
  CHECK(res.exit_code == 2);
  CHECK(res.out.find("suite FAIL") != std::string::npos);
  CHECK(res.out.find("violations=1") != std::string::npos);
}
