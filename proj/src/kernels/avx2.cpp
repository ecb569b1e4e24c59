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

// AVX2 + FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be reached after a runtime cpuid check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "lpbench/kernels.hpp"

namespace lpbench::kernels {
namespace {

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double hsum_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sum_abs_w_avx2(const double* x, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = abs_pd(_mm256_loadu_pd(x + i));
    const __m256d wv = _mm256_loadu_pd(w + i);
    acc = _mm256_fmadd_pd(xv, wv, acc);
  }
  double total = hsum_pd(acc);
  for (; i < n; ++i) total += std::abs(x[i]) * w[i];
  return total;
}

double sum_sq_w_avx2(const double* x, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d wv = _mm256_loadu_pd(w + i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(xv, xv), wv, acc);
  }
  double total = hsum_pd(acc);
  for (; i < n; ++i) total += (x[i] * x[i]) * w[i];
  return total;
}

// Deinterleaves four complex values into [ |z0|^2, |z2|^2, |z1|^2, |z3|^2 ]
// lane order; 0xD8 selects lanes (0,2,1,3) to restore index order.
double sum_sq_w_cplx_avx2(const double* z, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(z + 2 * i);
    const __m256d b = _mm256_loadu_pd(z + 2 * i + 4);
    const __m256d re = _mm256_unpacklo_pd(a, b);
    const __m256d im = _mm256_unpackhi_pd(a, b);
    const __m256d sq =
        _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
    const __m256d wv =
        _mm256_permute4x64_pd(_mm256_loadu_pd(w + i), 0xD8);
    acc = _mm256_fmadd_pd(sq, wv, acc);
  }
  double total = hsum_pd(acc);
  for (; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    total += (re * re + im * im) * w[i];
  }
  return total;
}

double dot_w_avx2(const double* a, const double* w, const double* f,
                  std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d aw =
        _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(w + i));
    acc = _mm256_fmadd_pd(aw, _mm256_loadu_pd(f + i), acc);
  }
  double total = hsum_pd(acc);
  for (; i < n; ++i) total += (a[i] * w[i]) * f[i];
  return total;
}

double max_abs_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
  }
  double m = hmax_pd(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

// No FMA here: elementwise kernels promise bit-identical results to the
// scalar reference, so the rounding sequence (mul, mul, add, sqrt) must
// match it exactly.
void abs_cplx_avx2(const double* z, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(z + 2 * i);
    const __m256d b = _mm256_loadu_pd(z + 2 * i + 4);
    const __m256d re = _mm256_unpacklo_pd(a, b);
    const __m256d im = _mm256_unpackhi_pd(a, b);
    const __m256d sq =
        _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im));
    _mm256_storeu_pd(out + i,
                     _mm256_permute4x64_pd(_mm256_sqrt_pd(sq), 0xD8));
  }
  for (; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    out[i] = std::sqrt(re * re + im * im);
  }
}

// Same bit-exactness constraint as abs_cplx: mul then add, no contraction.
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_add_pd(
        _mm256_mul_pd(av, _mm256_loadu_pd(x + i)), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Table& avx2_table() {
  static const Table table{
      "avx2",     sum_abs_w_avx2, sum_sq_w_avx2, sum_sq_w_cplx_avx2,
      dot_w_avx2, max_abs_avx2,   abs_cplx_avx2, axpy_avx2,
  };
  return table;
}

bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace lpbench::kernels

#endif  // x86-64
