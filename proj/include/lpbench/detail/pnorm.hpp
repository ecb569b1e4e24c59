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

#include <complex>
#include <cstddef>
#include <vector>

#include "lpbench/exponent.hpp"
#include "lpbench/kernels.hpp"
#include "lpbench/scalar.hpp"

namespace lpbench::detail {

// Shared weighted p-norm primitive. Every norm in the workbench reduces to
// this routine on a contiguous array, which is what makes the scalar-vs-
// vector reduction identity hold bit for bit: both paths run the identical
// instruction sequence on identical arrays.
inline double weighted_p_norm(const double* x, const double* w, std::size_t n,
                              const Exponent& p) {
  const auto& k = kernels::active();
  if (p.is_infinite()) return k.max_abs(x, n);
  const double pv = p.value();
  if (pv == 1.0) return k.sum_abs_w(x, w, n);
  if (pv == 2.0) return std::sqrt(k.sum_sq_w(x, w, n));
  const double m = k.max_abs(x, n);
  if (m == 0.0) return 0.0;
  // Exponents derived from reciprocal arithmetic (interpolation near an
  // endpoint, transfer exponents) reach the hundreds; |x|^p then leaves the
  // double range. Factoring out the peak keeps every ratio power in [0, 1],
  // and terms that flush to zero are genuinely negligible beside the peak.
  if (pv * std::abs(std::log2(m)) > 500.0) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += pow_abs(std::abs(x[i]) / m, pv) * w[i];
    }
    return m * std::pow(acc, 1.0 / pv);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += pow_abs(std::abs(x[i]), pv) * w[i];
  }
  return acc == 0.0 ? 0.0 : std::pow(acc, 1.0 / pv);
}

// Complex moduli are always taken through the kernel's sqrt(re^2 + im^2)
// sequence (desk-scale inputs, no overflow scaling), so the modulus of a
// single value and the modulus inside a norm agree bitwise.
inline double modulus(const std::complex<double>& z) {
  double out;
  kernels::active().abs_cplx(reinterpret_cast<const double*>(&z), 1, &out);
  return out;
}

inline double modulus(double x) { return std::abs(x); }

inline std::vector<double>& moduli_scratch() {
  thread_local std::vector<double> scratch;
  return scratch;
}

// Always routes through the moduli buffer, never the fused re^2+im^2 sum:
// a norm over complex values must equal the norm over their precomputed
// moduli bit for bit (the scalar-vs-vector reduction identity).
inline double weighted_p_norm(const std::complex<double>* z, const double* w,
                              std::size_t n, const Exponent& p) {
  const auto& k = kernels::active();
  auto& scratch = moduli_scratch();
  scratch.resize(n);
  k.abs_cplx(reinterpret_cast<const double*>(z), n, scratch.data());
  return weighted_p_norm(scratch.data(), w, n, p);
}

}  // namespace lpbench::detail
