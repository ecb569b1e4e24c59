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

#include <cstddef>

namespace lpbench::kernels {

// Low-level array kernels behind norms, matvecs and the sign-pattern
// enumeration. Each entry has a scalar reference implementation (strict
// left-to-right accumulation, the oracle in equivalence tests) and may have
// SIMD variants selected at runtime. SIMD sums use per-lane accumulators,
// so they reorder the reduction; differences vs the scalar table stay at
// rounding level and every consumer compares through certificate tolerances.
struct Table {
  const char* name;
  // sum_i |x_i| * w_i
  double (*sum_abs_w)(const double* x, const double* w, std::size_t n);
  // sum_i x_i^2 * w_i
  double (*sum_sq_w)(const double* x, const double* w, std::size_t n);
  // sum_i (re_i^2 + im_i^2) * w_i over interleaved complex storage
  double (*sum_sq_w_cplx)(const double* z, const double* w, std::size_t n);
  // sum_i a_i * w_i * f_i (kernel-operator row update)
  double (*dot_w)(const double* a, const double* w, const double* f,
                  std::size_t n);
  // max_i |x_i|
  double (*max_abs)(const double* x, std::size_t n);
  // out_i = |z_i| over interleaved complex storage
  void (*abs_cplx)(const double* z, std::size_t n, double* out);
  // y_i += alpha * x_i
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

// Reference implementations; always available.
const Table& scalar_table();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
const Table& avx2_table();
#endif
#if defined(__aarch64__)
const Table& neon_table();
#endif

// Runtime-selected table: the best supported variant, or the one named by
// the LPBENCH_KERNELS environment variable (scalar|avx2|neon|auto).
// Resolution happens once; an unknown or unsupported name throws.
const Table& active();

}  // namespace lpbench::kernels
