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

// Command-line front end. Single computations read a JSON payload from a
// file or stdin and print one JSON document; `check` emits JSONL, one
// certificate per instance; `fuzz` runs the seeded property sweep.
//
// Exit codes: 0 pass, 2 property violation, 64 usage or schema error,
// 65 numeric precondition, 70 internal error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpbench/errors.hpp"
#include "lpbench/suite.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitPrecondition = 65;
constexpr int kExitInternal = 70;

json read_payload(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw lpbench::usage_error("cannot open payload file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw lpbench::schema_error(std::string("payload: ") + e.what());
  }
}

int run_compute(const std::string& command, const std::string& path) {
  std::cout << lpbench::compute(command, read_payload(path)).dump(2) << "\n";
  return kExitPass;
}

int run_opnorm(const std::string& path, bool exact_only) {
  const json result = lpbench::compute("opnorm", read_payload(path));
  std::cout << result.dump(2) << "\n";
  if (exact_only && result.at("kind").get<std::string>() != "exact") {
    std::cerr << "opnorm: no closed form for this exponent pair; "
                 "the reported value is a bound\n";
    return kExitPrecondition;
  }
  return kExitPass;
}

// One certificate per instance, one line each; the name argument fills in
// for instances that do not carry their own.
int run_check(const std::string& name, const std::string& path) {
  json payload = read_payload(path);
  json items = payload.is_array() ? std::move(payload)
                                  : json::array({std::move(payload)});
  bool violated = false;
  for (json& instance : items) {
    if (instance.is_object() && !instance.contains("name")) {
      instance["name"] = name;
    }
    const json cert = lpbench::compute("check", instance);
    std::cout << cert.dump() << "\n";
    violated = violated || cert.at("status").get<std::string>() == "violated";
  }
  return violated ? kExitViolation : kExitPass;
}

struct FuzzOptions {
  lpbench::SuiteConfig config;
  std::string field = "real";
  std::string weights = "random";
  std::string report_path;
  std::vector<std::string> only;
};

int run_fuzz(FuzzOptions& opt) {
  opt.config.field = lpbench::field_from_string(opt.field);
  opt.config.weight_mode = lpbench::weight_mode_from_string(opt.weights);
  const lpbench::SuiteReport report = lpbench::run_suite(opt.config, opt.only);

  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path, std::ios::binary);
    if (!out) {
      throw lpbench::usage_error("cannot open report file '" +
                                 opt.report_path + "'");
    }
    out << lpbench::to_json(report).dump(2) << "\n";
  }

  int violations = 0;
  int errors = 0;
  for (const lpbench::PropertyResult& r : report.properties) {
    std::printf("%-36s trials=%-6d violations=%-4d errors=%-3d min_slack=%.6e\n",
                r.name.c_str(), r.trials, r.violations, r.errors, r.min_slack);
    if (r.violations > 0 && !r.min_slack_instance.is_null()) {
      // The replayable witness: `lpbench check <name> <file>` on this
      // instance reproduces the certificate bit for bit.
      std::printf("  instance: %s\n",
                  r.min_slack_instance.at("instance").dump().c_str());
    }
    if (r.errors > 0 && !r.first_error.is_null()) {
      std::printf("  error: %s\n", r.first_error.dump().c_str());
    }
    violations += r.violations;
    errors += r.errors;
  }
  std::printf("suite %s  seed=%llu trials=%d field=%s weights=%s elapsed=%.2fs\n",
              report.passed ? "PASS" : "FAIL",
              static_cast<unsigned long long>(report.config.seed),
              report.config.trials, lpbench::to_string(report.config.field),
              lpbench::to_string(report.config.weight_mode),
              report.elapsed_seconds);
  if (violations > 0) return kExitViolation;
  if (errors > 0) return kExitInternal;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted lp-norm workbench: norms, inequality certificates, "
               "operator norms, trace quasinorms, and a seeded property "
               "fuzzer."};
  app.require_subcommand(1);
  app.set_version_flag("--version", lpbench::kVersion);

  std::string norm_path;
  CLI::App* norm = app.add_subcommand(
      "norm", "Evaluate a weighted norm; payload from file or stdin.");
  norm->add_option("payload", norm_path, "JSON payload file ('-' for stdin)");

  std::string check_name;
  std::string check_path;
  CLI::App* check = app.add_subcommand(
      "check",
      "Evaluate property instances to certificates, one JSONL line each.");
  check->add_option("name", check_name, "property name, e.g. ineq.holder")
      ->required();
  check->add_option("payload", check_path,
                    "JSON instance or instance list ('-' for stdin)");

  std::string opnorm_path;
  bool exact_only = false;
  CLI::App* opnorm = app.add_subcommand(
      "opnorm", "Induced (r->s) norm of a kernel operator.");
  opnorm->add_option("payload", opnorm_path,
                     "JSON payload file ('-' for stdin)");
  opnorm->add_flag("--exact-only", exact_only,
                   "fail with exit 65 unless a closed form applies");

  std::string trace_path;
  CLI::App* tracenorm = app.add_subcommand(
      "tracenorm", "Trace p-quasinorm estimate of a linear map.");
  tracenorm->add_option("payload", trace_path,
                        "JSON payload file ('-' for stdin)");

  std::string kernel_path;
  CLI::App* kernel = app.add_subcommand(
      "kernel", "Kernel operator utilities: apply, compose, infone checks.");
  kernel->add_option("payload", kernel_path,
                     "JSON payload file ('-' for stdin)");

  FuzzOptions fuzz_opt;
  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "Run the randomized property sweep over the whole corpus.");
  fuzz->add_option("--seed", fuzz_opt.config.seed, "base seed for the sweep")
      ->envname("LPBENCH_SEED");
  fuzz->add_option("--trials", fuzz_opt.config.trials,
                   "trial budget per unit-cost property")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  fuzz->add_option("--field", fuzz_opt.field, "scalar field")
      ->check(CLI::IsMember({"real", "complex"}));
  fuzz->add_option("--weights", fuzz_opt.weights, "weight generation mode")
      ->check(CLI::IsMember({"unit", "probability", "random"}));
  fuzz->add_option("--n-min", fuzz_opt.config.n_min, "smallest set size");
  fuzz->add_option("--n-max", fuzz_opt.config.n_max, "largest set size");
  fuzz->add_option("--json", fuzz_opt.report_path,
                   "write the full JSON report to this file");
  fuzz->add_option("--only", fuzz_opt.only,
                   "restrict to these properties (repeatable)");
  fuzz->add_flag("--paper-literal-interpolation",
                 fuzz_opt.config.paper_literal_interpolation,
                 "include the uncorrected interpolation bound, which a "
                 "singleton refutes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (norm->parsed()) return run_compute("norm", norm_path);
    if (check->parsed()) return run_check(check_name, check_path);
    if (opnorm->parsed()) return run_opnorm(opnorm_path, exact_only);
    if (tracenorm->parsed()) return run_compute("tracenorm", trace_path);
    if (kernel->parsed()) return run_compute("kernel", kernel_path);
    if (fuzz->parsed()) return run_fuzz(fuzz_opt);
  } catch (const lpbench::precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const lpbench::usage_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
