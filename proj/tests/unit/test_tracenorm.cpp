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
#include <complex>
#include <vector>

#include "lpbench/tracenorm.hpp"

using Complex = std::complex<double>;
using lpbench::Exponent;
using lpbench::Functional;
using lpbench::LinearMap;
using lpbench::NormedSpace;
using lpbench::QuasinormKind;
using lpbench::RankOneRepresentation;
using lpbench::RankOneTerm;

namespace {

const Exponent k1 = Exponent::finite(1.0);
const Exponent k2 = Exponent::finite(2.0);
const Exponent kHalf = Exponent::finite(0.5);

NormedSpace<double> euclid(std::size_t d) {
  return NormedSpace<double>::lp(k2, d);
}

}  // namespace

TEST_CASE("linear maps apply, add, and scale") {
  const LinearMap<double> a(euclid(2), {1.0, 2.0, 3.0, 4.0});
  const std::vector<double> u{1.0, -1.0};
  const auto v = a.apply(u);
  CHECK(v[0] == -1.0);
  CHECK(v[1] == -1.0);
  CHECK_THROWS_AS(LinearMap<double>(euclid(2), {1.0, 2.0, 3.0}),
                  lpbench::shape_error);

  const LinearMap<double> b(euclid(2), {0.0, 1.0, 1.0, 0.0});
  const auto sum = lpbench::add(a, b);
  CHECK(sum.entry(0, 1) == 3.0);
  const auto twice = lpbench::scale(2.0, a);
  CHECK(twice.entry(1, 1) == 8.0);

  // trace(B A) = sum_{i,j} b(i,j) a(j,i).
  CHECK(lpbench::trace_of_product(b, a) == doctest::Approx(2.0 + 3.0));
}

TEST_CASE("dual norms of lp functionals are exact") {
  SUBCASE("euclidean") {
    const Functional<double> lam(euclid(2), {3.0, 4.0});
    const auto res = lpbench::dual_norm(lam);
    CHECK(res.exact);
    CHECK(res.value == doctest::Approx(5.0));
  }
  SUBCASE("weighted l1 dualizes to a weighted sup") {
    const auto space =
        NormedSpace<double>::weighted_lp(k1, {2.0, 0.5});
    const Functional<double> lam(space, {2.0, 1.0});
    const auto res = lpbench::dual_norm(lam);
    CHECK(res.exact);
    // sup |lambda(u)| over ||u||_{w,1} <= 1 is max |lambda_i| / w_i.
    CHECK(res.value == doctest::Approx(2.0));
  }
  SUBCASE("sup norm ignores weights, so its dual is plain l1") {
    const auto space = NormedSpace<double>::weighted_lp(
        Exponent::infinity(), {2.0, 0.5});
    const Functional<double> lam(space, {3.0, -1.0});
    const auto res = lpbench::dual_norm(lam);
    CHECK(res.exact);
    CHECK(res.value == doctest::Approx(4.0));
  }
  SUBCASE("custom norms get a sampled lower estimate") {
    const auto custom = NormedSpace<double>::custom(
        3,
        [](std::span<const double> v) {
          double s = 0.0;
          for (double x : v) s += x * x;
          return std::sqrt(s);
        },
        "euclid3");
    const Functional<double> lam(custom, {1.0, -2.0, 2.0});
    const auto sampled = lpbench::dual_norm(lam, 2000, 5);
    CHECK_FALSE(sampled.exact);
    CHECK(sampled.value <= 3.0 + 1e-9);
    CHECK(sampled.value >= 2.5);
  }
}

TEST_CASE("canonical representation assembles back to the map") {
  const LinearMap<double> a(euclid(2), {1.0, 0.0, 0.0, 1.0});
  const auto rep = lpbench::canonical_representation(a);
  // Zero entries are skipped: the identity keeps two terms.
  CHECK(rep.terms.size() == 2);
  const auto back = lpbench::assemble(rep);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(back.matrix()[i] == doctest::Approx(a.matrix()[i]).epsilon(1e-12));
  }

  const LinearMap<double> dense(euclid(2), {1.0, -2.0, 0.5, 3.0});
  const auto drep = lpbench::canonical_representation(dense);
  CHECK(drep.terms.size() == 4);
  const auto dback = lpbench::assemble(drep);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(dback.matrix()[i] ==
          doctest::Approx(dense.matrix()[i]).epsilon(1e-12));
  }
}

TEST_CASE("assembly enforces admissibility") {
  const auto space = euclid(2);
  RankOneRepresentation<double> rep{space, {}};
  rep.terms.push_back(RankOneTerm<double>{
      1.0, Functional<double>(space, {2.0, 0.0}), {1.0, 0.0}});
  CHECK_THROWS_AS(lpbench::assemble(rep), lpbench::precondition_error);
  rep.terms[0] = RankOneTerm<double>{
      1.0, Functional<double>(space, {1.0, 0.0}), {2.0, 0.0}};
  CHECK_THROWS_AS(lpbench::assemble(rep), lpbench::precondition_error);
}

TEST_CASE("trace norm of a diagonal map is the weighted diagonal sum") {
  const LinearMap<double> a(euclid(2), {3.0, 0.0, 0.0, 4.0});
  const auto est = lpbench::trace_quasinorm(a, k1);
  CHECK(est.kind == QuasinormKind::exact_euclidean);
  CHECK(est.value == doctest::Approx(7.0).epsilon(1e-9));
}

TEST_CASE("trace norm of a rank-one map is its singular value") {
  // A = sigma u v^T with unit u, v: singular values {sigma, 0}.
  const double s = 2.5;
  const double u0 = 0.6, u1 = 0.8;
  const double v0 = 1.0 / std::sqrt(2.0), v1 = -1.0 / std::sqrt(2.0);
  const LinearMap<double> a(
      euclid(2),
      {s * u0 * v0, s * u0 * v1, s * u1 * v0, s * u1 * v1});
  const auto est = lpbench::trace_quasinorm(a, k1);
  CHECK(est.value == doctest::Approx(s).epsilon(1e-9));
}

TEST_CASE("identity trace quasinorms sit between d and d squared") {
  const LinearMap<double> id(euclid(3), {1.0, 0.0, 0.0,
                                         0.0, 1.0, 0.0,
                                         0.0, 0.0, 1.0});
  const auto one = lpbench::trace_quasinorm(id, k1);
  CHECK(one.value == doctest::Approx(3.0).epsilon(1e-9));
  const auto half = lpbench::trace_quasinorm(id, kHalf);
  CHECK(half.kind == QuasinormKind::upper_bound);
  CHECK(half.value >= 3.0 - 1e-9);
  CHECK(half.value <= 9.0 + 1e-9);
}

TEST_CASE("estimates are absolutely homogeneous") {
  const LinearMap<double> a(euclid(3),
                            {0.3, -1.2, 0.7,
                             2.0, 0.1, -0.4,
                             -0.9, 0.5, 1.1});
  for (double alpha : {3.7, 0.013, -250.0}) {
    for (const Exponent& p : {k1, kHalf, Exponent::finite(0.25)}) {
      const auto base = lpbench::trace_quasinorm(a, p);
      const auto scaled = lpbench::trace_quasinorm(scale(alpha, a), p);
      CHECK(scaled.value ==
            doctest::Approx(std::abs(alpha) * base.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("quasinorm estimates respect structure across p") {
  const LinearMap<double> a(euclid(2), {1.0, 0.5, -0.25, 2.0});
  const auto report = lpbench::quasinorm_properties_check(
      a, {k1, Exponent::finite(0.75), kHalf, Exponent::finite(0.25)}, 0, 4);
  CHECK(report.monotone);
  CHECK(report.subadditive);
  // p values come back sorted from 1 downward.
  REQUIRE(report.p_values.size() == 4);
  CHECK(report.p_values.front() == 1.0);
  CHECK(report.p_values.back() == 0.25);
  for (std::size_t i = 1; i < report.estimates.size(); ++i) {
    CHECK(report.estimates[i] >=
          report.estimates[i - 1] * (1.0 - 1e-9) - 1e-12);
  }
  CHECK(report.worst_subadditivity.slack() >= -1e-9);
}

TEST_CASE("quasinorm exponent domain") {
  const LinearMap<double> a(euclid(2), {1.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS(lpbench::trace_quasinorm(a, k2), lpbench::usage_error);
  CHECK_THROWS_AS(lpbench::trace_quasinorm(a, Exponent::infinity()),
                  lpbench::usage_error);
}

TEST_CASE("complex maps carry their singular values too") {
  // Diagonal complex map with |entries| 2 and 1.
  const auto space = NormedSpace<Complex>::lp(k2, 2);
  const LinearMap<Complex> a(space, {Complex{0.0, 2.0}, Complex{0.0, 0.0},
                                     Complex{0.0, 0.0}, Complex{1.0, 0.0}});
  const auto est = lpbench::trace_quasinorm(a, k1);
  CHECK(est.value == doctest::Approx(3.0).epsilon(1e-9));
}
