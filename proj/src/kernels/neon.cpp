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

// NEON kernel variants (baseline on aarch64, no runtime feature check
// needed). Mirrors the AVX2 file: sums may use fused accumulation, the
// elementwise kernels replicate the scalar rounding sequence exactly.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

#include "lpbench/kernels.hpp"

namespace lpbench::kernels {
namespace {

double sum_abs_w_neon(const double* x, const double* w, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vabsq_f64(vld1q_f64(x + i)), vld1q_f64(w + i));
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += std::abs(x[i]) * w[i];
  return total;
}

double sum_sq_w_neon(const double* x, const double* w, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xv = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, vmulq_f64(xv, xv), vld1q_f64(w + i));
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += (x[i] * x[i]) * w[i];
  return total;
}

double sum_sq_w_cplx_neon(const double* z, const double* w, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2x2_t zz = vld2q_f64(z + 2 * i);  // [re0,re1], [im0,im1]
    const float64x2_t sq =
        vfmaq_f64(vmulq_f64(zz.val[1], zz.val[1]), zz.val[0], zz.val[0]);
    acc = vfmaq_f64(acc, sq, vld1q_f64(w + i));
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    total += (re * re + im * im) * w[i];
  }
  return total;
}

double dot_w_neon(const double* a, const double* w, const double* f,
                  std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t aw = vmulq_f64(vld1q_f64(a + i), vld1q_f64(w + i));
    acc = vfmaq_f64(acc, aw, vld1q_f64(f + i));
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += (a[i] * w[i]) * f[i];
  return total;
}

double max_abs_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  }
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void abs_cplx_neon(const double* z, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2x2_t zz = vld2q_f64(z + 2 * i);
    const float64x2_t sq = vaddq_f64(vmulq_f64(zz.val[0], zz.val[0]),
                                     vmulq_f64(zz.val[1], zz.val[1]));
    vst1q_f64(out + i, vsqrtq_f64(sq));
  }
  for (; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    out[i] = std::sqrt(re * re + im * im);
  }
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t yv =
        vaddq_f64(vmulq_f64(av, vld1q_f64(x + i)), vld1q_f64(y + i));
    vst1q_f64(y + i, yv);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Table& neon_table() {
  static const Table table{
      "neon",     sum_abs_w_neon, sum_sq_w_neon, sum_sq_w_cplx_neon,
      dot_w_neon, max_abs_neon,   abs_cplx_neon, axpy_neon,
  };
  return table;
}

}  // namespace lpbench::kernels

#endif  // aarch64
