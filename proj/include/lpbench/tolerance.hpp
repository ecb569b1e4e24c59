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

#include <algorithm>
#include <cmath>

namespace lpbench {

// Workbench-wide comparison policy: relative 1e-9 with absolute floor 1e-12.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsFloor = 1e-12;

inline bool nearly_equal(double a, double b, double rel = kRelTol,
                         double floor = kAbsFloor) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(floor, rel * scale);
}

// Equality band for certificates: |slack| <= 1e-9 * max(1, rhs).
inline double certificate_tolerance(double rhs) {
  return kRelTol * std::max(1.0, std::abs(rhs));
}

}  // namespace lpbench
