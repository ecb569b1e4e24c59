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
#include <complex>
#include <concepts>

namespace lpbench {

// The workspace is real or complex as a whole; the two scalar types below
// are the only instantiations, and mixing them does not compile.
template <class T>
concept ScalarType =
    std::same_as<T, double> || std::same_as<T, std::complex<double>>;

template <class T>
inline constexpr bool is_complex_v = false;
template <>
inline constexpr bool is_complex_v<std::complex<double>> = true;

inline double abs_value(double x) { return std::abs(x); }
inline double abs_value(const std::complex<double>& z) { return std::abs(z); }

// sgn(z) = z/|z| with sgn(0) = 0.
inline double sgn(double x) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}
inline std::complex<double> sgn(const std::complex<double>& z) {
  const double m = std::abs(z);
  return m == 0.0 ? std::complex<double>(0.0, 0.0) : z / m;
}

inline double conj_value(double x) { return x; }
inline std::complex<double> conj_value(const std::complex<double>& z) {
  return std::conj(z);
}

// |x|^t with the convention 0^t = 0 for every t > 0 (relevant when the
// exponent routes through exp/log).
inline double pow_abs(double base, double t) {
  if (base == 0.0) return 0.0;
  if (t == 1.0) return base;
  return std::pow(base, t);
}

}  // namespace lpbench
