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

#include <cmath>
#include <json.hpp>
#include <string>

#include "lpbench/errors.hpp"
#include "lpbench/tolerance.hpp"

namespace lpbench {

enum class CertStatus { holds, equality, violated };

inline const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::holds:
      return "holds";
    case CertStatus::equality:
      return "equality";
    case CertStatus::violated:
      return "violated";
  }
  return "unknown";
}

// Outcome of one inequality check: lhs <= rhs claimed, slack = rhs - lhs.
// status is equality when |slack| <= 1e-9 * max(1, rhs), violated when
// slack < -tolerance, holds otherwise. witness optionally carries the
// function/vector data achieving or refuting the bound, as JSON.
struct Certificate {
  double lhs = 0.0;
  double rhs = 0.0;
  CertStatus status = CertStatus::holds;
  nlohmann::json witness;

  double slack() const { return rhs - lhs; }
};

inline Certificate make_certificate(double lhs, double rhs,
                                    nlohmann::json witness = nullptr) {
  if (std::isnan(lhs) || std::isnan(rhs)) {
    throw error("certificate sides must not be NaN");
  }
  Certificate cert;
  cert.lhs = lhs;
  cert.rhs = rhs;
  cert.witness = std::move(witness);
  const double slack = rhs - lhs;
  const double tol = certificate_tolerance(rhs);
  if (std::abs(slack) <= tol) {
    cert.status = CertStatus::equality;
  } else if (slack > 0.0) {
    cert.status = CertStatus::holds;
  } else {
    cert.status = CertStatus::violated;
  }
  return cert;
}

}  // namespace lpbench
