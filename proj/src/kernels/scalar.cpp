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

#include <cmath>
#include <cstddef>

#include "lpbench/kernels.hpp"

// Reference kernels. Accumulation is strict left-to-right in index order;
// the SIMD variants are tested against these.

namespace lpbench::kernels {
namespace {

double sum_abs_w_ref(const double* x, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(x[i]) * w[i];
  return acc;
}

double sum_sq_w_ref(const double* x, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += (x[i] * x[i]) * w[i];
  return acc;
}

double sum_sq_w_cplx_ref(const double* z, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    acc += (re * re + im * im) * w[i];
  }
  return acc;
}

double dot_w_ref(const double* a, const double* w, const double* f,
                 std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += (a[i] * w[i]) * f[i];
  return acc;
}

double max_abs_ref(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void abs_cplx_ref(const double* z, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    out[i] = std::sqrt(re * re + im * im);
  }
}

void axpy_ref(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Table& scalar_table() {
  static const Table table{
      "scalar",        sum_abs_w_ref, sum_sq_w_ref, sum_sq_w_cplx_ref,
      dot_w_ref,       max_abs_ref,   abs_cplx_ref, axpy_ref,
  };
  return table;
}

}  // namespace lpbench::kernels
