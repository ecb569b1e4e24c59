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

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpbench/certificate.hpp"
#include "lpbench/exponent.hpp"
#include "lpbench/opnorm.hpp"
#include "lpbench/tolerance.hpp"

namespace lpbench {

inline constexpr const char* kVersion = "0.1.0";

enum class Field { real, complex };
enum class WeightMode { unit, probability, random };

const char* to_string(Field field);
const char* to_string(WeightMode mode);
Field field_from_string(const std::string& s);
WeightMode weight_mode_from_string(const std::string& s);

std::vector<Exponent> default_exponent_pool();

// Scale and shape of one randomized sweep over the property corpus.
// Heavier properties internally divide `trials` by a fixed cost factor,
// so the field is a global budget knob rather than an exact count.
struct SuiteConfig {
  std::uint64_t seed = 0;
  int trials = 1000;
  int n_min = 1;
  int n_max = 12;
  Field field = Field::real;
  WeightMode weight_mode = WeightMode::random;
  std::vector<Exponent> exponent_pool = default_exponent_pool();
  double rel_tol = kRelTol;
  bool paper_literal_interpolation = false;
  AscentBudget budget{8, 150, 0};
};

struct PropertyResult {
  std::string name;
  int trials = 0;
  int violations = 0;
  int errors = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  // {"instance": <replayable through compute("check", instance)>,
  //  "certificate": <the certificate that instance produced>}
  nlohmann::json min_slack_instance;
  nlohmann::json first_error;
  bool passed() const { return violations == 0 && errors == 0; }
};

struct SuiteReport {
  SuiteConfig config;
  std::string version = kVersion;
  std::vector<PropertyResult> properties;
  bool passed = false;
  // The only field allowed to differ between identically configured runs.
  double elapsed_seconds = 0.0;
};

std::vector<std::string> suite_property_names(const SuiteConfig& config);

SuiteReport run_suite(const SuiteConfig& config);
// `only` restricts the sweep to the named properties; names may drop their
// module prefix when unambiguous ("holder" for "ineq.holder").
SuiteReport run_suite(const SuiteConfig& config,
                      const std::vector<std::string>& only);

// Re-evaluates one serialized property instance; the replay half of the
// suite's failure contract.
Certificate check_instance(const nlohmann::json& instance);

// JSON front door shared by the CLI subcommands:
// norm, check, opnorm, tracenorm, kernel.
nlohmann::json compute(const std::string& command,
                       const nlohmann::json& payload);

nlohmann::json to_json(const SuiteConfig& config);
SuiteConfig suite_config_from_json(const nlohmann::json& j,
                                   const std::string& path);
nlohmann::json to_json(const PropertyResult& result);
nlohmann::json to_json(const SuiteReport& report);

}  // namespace lpbench
