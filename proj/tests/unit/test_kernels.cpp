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

#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "lpbench/kernels.hpp"
#include "lpbench/rng.hpp"

namespace {

using lpbench::Rng;
using lpbench::kernels::Table;

// Lengths straddling every SIMD width boundary: below, at, and past one,
// two, and several vector registers, plus the scalar tail cases.
const std::vector<std::size_t> kLengths = {1,  2,  3,  4,  5,  7,  8,
                                           9,  15, 16, 17, 31, 32, 33, 64};

std::vector<double> random_values(Rng& rng, std::size_t n, double scale) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.gaussian() * scale;
  return v;
}

std::vector<double> random_weights(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  for (double& x : w) x = std::pow(10.0, rng.uniform(-1.0, 1.0));
  return w;
}

// SIMD variants reorder the reduction, so sums agree with the scalar
// reference to rounding, not bitwise.
void check_tables_agree(const Table& reference, const Table& candidate,
                        std::uint64_t seed) {
  for (std::size_t n : kLengths) {
    Rng rng = Rng::stream(seed, 0xBEEFu, n);
    const std::vector<double> x = random_values(rng, n, 3.0);
    const std::vector<double> w = random_weights(rng, n);
    const std::vector<double> f = random_values(rng, n, 2.0);
    const std::vector<double> z = random_values(rng, 2 * n, 1.5);

    CAPTURE(n);
    const double sum_abs_ref = reference.sum_abs_w(x.data(), w.data(), n);
    CHECK(candidate.sum_abs_w(x.data(), w.data(), n) ==
          doctest::Approx(sum_abs_ref).epsilon(1e-13));

    const double sum_sq_ref = reference.sum_sq_w(x.data(), w.data(), n);
    CHECK(candidate.sum_sq_w(x.data(), w.data(), n) ==
          doctest::Approx(sum_sq_ref).epsilon(1e-13));

    const double sum_sq_cplx_ref =
        reference.sum_sq_w_cplx(z.data(), w.data(), n);
    CHECK(candidate.sum_sq_w_cplx(z.data(), w.data(), n) ==
          doctest::Approx(sum_sq_cplx_ref).epsilon(1e-13));

    const double dot_ref = reference.dot_w(x.data(), w.data(), f.data(), n);
    CHECK(candidate.dot_w(x.data(), w.data(), f.data(), n) ==
          doctest::Approx(dot_ref).epsilon(1e-12));

    // max and the pointwise ops have one correct answer; require it exactly.
    CHECK(candidate.max_abs(x.data(), n) == reference.max_abs(x.data(), n));

    std::vector<double> abs_ref(n), abs_cand(n);
    reference.abs_cplx(z.data(), n, abs_ref.data());
    candidate.abs_cplx(z.data(), n, abs_cand.data());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(abs_cand[i] == doctest::Approx(abs_ref[i]).epsilon(1e-15));
    }

    std::vector<double> y_ref = random_values(rng, n, 1.0);
    std::vector<double> y_cand = y_ref;
    reference.axpy(0.75, x.data(), y_ref.data(), n);
    candidate.axpy(0.75, x.data(), y_cand.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(y_cand[i] == doctest::Approx(y_ref[i]).epsilon(1e-14));
    }
  }
}

}  // namespace

TEST_CASE("scalar table matches hand-computed sums") {
  const Table& t = lpbench::kernels::scalar_table();
  const double x[] = {3.0, -4.0, 2.0};
  const double w[] = {1.0, 2.0, 0.5};
  const double f[] = {2.0, 1.0, -1.0};
  CHECK(t.sum_abs_w(x, w, 3) == 12.0);        // 3 + 8 + 1
  CHECK(t.sum_sq_w(x, w, 3) == 43.0);         // 9 + 32 + 2
  CHECK(t.dot_w(x, w, f, 3) == -3.0);         // 6 - 8 - 1
  CHECK(t.max_abs(x, 3) == 4.0);
  const double z[] = {3.0, 4.0, 0.0, -2.0};   // two complex values
  CHECK(t.sum_sq_w_cplx(z, w, 2) == 33.0);    // 25*1 + 4*2
  double out[2];
  t.abs_cplx(z, 2, out);
  CHECK(out[0] == 5.0);
  CHECK(out[1] == 2.0);
  double y[] = {1.0, 1.0, 1.0};
  t.axpy(2.0, x, y, 3);
  CHECK(y[0] == 7.0);
  CHECK(y[1] == -7.0);
  CHECK(y[2] == 5.0);
}

TEST_CASE("scalar table handles empty and single-element arrays") {
  const Table& t = lpbench::kernels::scalar_table();
  const double x[] = {-2.5};
  const double w[] = {4.0};
  CHECK(t.sum_abs_w(x, w, 0) == 0.0);
  CHECK(t.max_abs(x, 0) == 0.0);
  CHECK(t.sum_abs_w(x, w, 1) == 10.0);
  CHECK(t.max_abs(x, 1) == 2.5);
}

TEST_CASE("active table agrees with the scalar reference") {
  check_tables_agree(lpbench::kernels::scalar_table(),
                     lpbench::kernels::active(), 11);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 table agrees with the scalar reference") {
  if (!lpbench::kernels::avx2_supported()) return;
  check_tables_agree(lpbench::kernels::scalar_table(),
                     lpbench::kernels::avx2_table(), 17);
}
#endif
#if defined(__aarch64__)
TEST_CASE("neon table agrees with the scalar reference") {
  check_tables_agree(lpbench::kernels::scalar_table(),
                     lpbench::kernels::neon_table(), 17);
}
#endif
