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

#include "lpbench/norms.hpp"

using Complex = std::complex<double>;
using lpbench::Exponent;
using lpbench::MonotonicityMode;
using lpbench::NormedSpace;
using lpbench::ScalarFunction;
using lpbench::VectorFunction;
using lpbench::WeightedSet;
using lpbench::weighted_norm;
using lpbench::vector_norm;

TEST_CASE("unit-weight p-norms on (3, 4)") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  const ScalarFunction<double> f(e, {3.0, -4.0});
  CHECK(weighted_norm(f, Exponent::finite(2.0)) == doctest::Approx(5.0));
  CHECK(weighted_norm(f, Exponent::finite(1.0)) == doctest::Approx(7.0));
  CHECK(weighted_norm(f, Exponent::infinity()) == 4.0);
  // p = 1/2: (3^(1/2) + 4^(1/2))^2
  const double expected = std::pow(std::sqrt(3.0) + 2.0, 2.0);
  CHECK(weighted_norm(f, Exponent::finite(0.5)) == doctest::Approx(expected));
}

TEST_CASE("weights scale the sum but not the sup") {
  const WeightedSet e = WeightedSet::indexed({4.0, 0.25});
  const ScalarFunction<double> f(e, {1.0, 2.0});
  // (1*4 + 4*0.25)^(1/2) = sqrt(5)
  CHECK(weighted_norm(f, Exponent::finite(2.0)) ==
        doctest::Approx(std::sqrt(5.0)));
  CHECK(weighted_norm(f, Exponent::finite(1.0)) == doctest::Approx(4.5));
  CHECK(weighted_norm(f, Exponent::infinity()) == 2.0);
}

TEST_CASE("zero function has zero norm at every exponent") {
  const WeightedSet e = WeightedSet::indexed({2.0, 3.0, 0.5});
  const ScalarFunction<double> z(e, {0.0, 0.0, 0.0});
  for (double p : {0.25, 0.5, 1.0, 2.0, 7.0}) {
    CHECK(weighted_norm(z, Exponent::finite(p)) == 0.0);
  }
  CHECK(weighted_norm(z, Exponent::infinity()) == 0.0);
}

TEST_CASE("complex moduli drive the norm") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  const ScalarFunction<Complex> f(e, {Complex{3.0, 4.0}, Complex{0.0, 12.0}});
  CHECK(weighted_norm(f, Exponent::finite(2.0)) == doctest::Approx(13.0));
  CHECK(weighted_norm(f, Exponent::finite(1.0)) == doctest::Approx(17.0));
  CHECK(weighted_norm(f, Exponent::infinity()) == doctest::Approx(12.0));
}

TEST_CASE("huge exponents stay finite through peak rescaling") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  // |2|^500 overflows a double; the norm still must come out as just
  // above the peak.
  const ScalarFunction<double> big(e, {2.0, 1.0});
  CHECK(weighted_norm(big, Exponent::finite(500.0)) ==
        doctest::Approx(2.0).epsilon(1e-3));
  // |1e-3|^500 underflows to zero; the peak must survive.
  const ScalarFunction<double> small(e, {1e-3, 1e-300});
  CHECK(weighted_norm(small, Exponent::finite(500.0)) ==
        doctest::Approx(1e-3).epsilon(1e-3));
}

TEST_CASE("vector norm with scalar codomain reduces bitwise") {
  const WeightedSet e = WeightedSet::indexed({1.5, 0.25, 3.0});
  const std::vector<double> values{1.25, -0.75, 2.5};
  const ScalarFunction<double> f(e, values);
  const VectorFunction<double> fv(e, NormedSpace<double>::scalars(), values);
  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(vector_norm(fv, Exponent::finite(p)) ==
          weighted_norm(f, Exponent::finite(p)));
  }
  CHECK(vector_norm(fv, Exponent::infinity()) ==
        weighted_norm(f, Exponent::infinity()));
}

TEST_CASE("vector norm composes the codomain norm with the index norm") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  const NormedSpace<double> l2 = NormedSpace<double>::lp(Exponent::finite(2.0), 2);
  // ||f(0)||_2 = 5, ||f(1)||_2 = 13.
  const VectorFunction<double> f(e, l2, {3.0, 4.0, 5.0, 12.0});
  CHECK(vector_norm(f, Exponent::finite(1.0)) == doctest::Approx(18.0));
  CHECK(vector_norm(f, Exponent::infinity()) == doctest::Approx(13.0));
}

TEST_CASE("monotonicity under unit weights: norms shrink as p grows") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0, 1.0});
  const ScalarFunction<double> f(e, {1.0, -2.0, 0.5});
  const auto result =
      monotonicity_certificate(f, Exponent::finite(1.0), Exponent::finite(3.0));
  CHECK(result.mode == MonotonicityMode::unit_weight);
  REQUIRE(result.certificate.has_value());
  CHECK(result.certificate->status != lpbench::CertStatus::violated);
  CHECK(result.certificate->lhs ==
        doctest::Approx(weighted_norm(f, Exponent::finite(3.0))));
  REQUIRE(result.sup_bound.has_value());
  CHECK(result.sup_bound->status != lpbench::CertStatus::violated);
}

TEST_CASE("monotonicity under probability weights reverses") {
  const WeightedSet e = WeightedSet::indexed({0.5, 0.25, 0.25});
  const ScalarFunction<double> f(e, {1.0, -2.0, 0.5});
  const auto result =
      monotonicity_certificate(f, Exponent::finite(1.0), Exponent::finite(3.0));
  CHECK(result.mode == MonotonicityMode::probability_weight);
  REQUIRE(result.certificate.has_value());
  CHECK(result.certificate->status != lpbench::CertStatus::violated);
  CHECK(result.certificate->lhs ==
        doctest::Approx(weighted_norm(f, Exponent::finite(1.0))));

  const WeightedSet skew = WeightedSet::indexed({2.0, 3.0});
  const ScalarFunction<double> g(skew, {1.0, 1.0});
  const auto na =
      monotonicity_certificate(g, Exponent::finite(1.0), Exponent::finite(2.0));
  CHECK(na.mode == MonotonicityMode::not_applicable);
  CHECK_FALSE(na.certificate.has_value());

  CHECK_THROWS_AS(
      monotonicity_certificate(f, Exponent::finite(3.0), Exponent::finite(1.0)),
      lpbench::usage_error);
}

TEST_CASE("jensen power inequality on a probability space") {
  const WeightedSet e = WeightedSet::indexed({0.5, 0.5});
  const ScalarFunction<double> phi(e, {1.0, 3.0});
  // mean = 2, mean^2 = 4 <= mean of squares = 5.
  const auto cert = jensen_power_certificate(phi, Exponent::finite(2.0));
  CHECK(cert.lhs == doctest::Approx(4.0));
  CHECK(cert.rhs == doctest::Approx(5.0));
  CHECK(cert.status == lpbench::CertStatus::holds);

  // r = 1 is equality.
  const auto eq = jensen_power_certificate(phi, Exponent::finite(1.0));
  CHECK(eq.status == lpbench::CertStatus::equality);

  CHECK_THROWS_AS(jensen_power_certificate(phi, Exponent::finite(0.5)),
                  lpbench::usage_error);
  const ScalarFunction<double> neg(e, {-1.0, 1.0});
  CHECK_THROWS_AS(jensen_power_certificate(neg, Exponent::finite(2.0)),
                  lpbench::precondition_error);
  const WeightedSet unit = WeightedSet::indexed({1.0, 1.0});
  const ScalarFunction<double> g(unit, {1.0, 2.0});
  CHECK_THROWS_AS(jensen_power_certificate(g, Exponent::finite(2.0)),
                  lpbench::precondition_error);
}

TEST_CASE("classify_norm recognizes norms and quasinorms") {
  const auto l2 = NormedSpace<double>::lp(Exponent::finite(2.0), 4);
  const auto r2 = classify_norm(l2, 200, 7);
  CHECK(r2.verdict == lpbench::NormVerdict::norm);
  CHECK(r2.triangle_ok);
  CHECK(r2.convexity_ok);

  const auto half = NormedSpace<double>::lp(Exponent::finite(0.5), 4);
  const auto rh = classify_norm(half, 200, 7);
  CHECK(rh.verdict == lpbench::NormVerdict::p_subadditive);
  CHECK_FALSE(rh.triangle_ok);
  // Sampled pair exponents can only approach the true value 1/2 from above.
  CHECK(rh.sampled_p_max >= 0.5 - 1e-6);
  CHECK(rh.sampled_p_max < 1.0);

  // A declared-subadditivity lie is caught by sampling.
  const auto liar = NormedSpace<double>::custom(
      3,
      [](std::span<const double> v) {
        double s = 0.0;
        for (double x : v) s += std::sqrt(std::abs(x));
        return s * s;
      },
      "sqrt-sum-claiming-triangle", 1.0);
  const auto rl = classify_norm(liar, 200, 7);
  CHECK(rl.verdict == lpbench::NormVerdict::violated);
  CHECK(rl.violated_property.has_value());
}

TEST_CASE("subadditivity descends to smaller exponents") {
  const auto half = NormedSpace<double>::lp(Exponent::finite(0.5), 3);
  const auto cert = subadditivity_descends(half, 0.5, 0.25, 100, 3);
  CHECK(cert.status != lpbench::CertStatus::violated);
  // Descent from the full triangle inequality also works.
  const auto l1 = NormedSpace<double>::lp(Exponent::finite(1.0), 3);
  const auto down = subadditivity_descends(l1, 1.0, 0.5, 100, 3);
  CHECK(down.status != lpbench::CertStatus::violated);
  // q must not exceed p, and p must not exceed the declared exponent.
  CHECK_THROWS_AS(subadditivity_descends(half, 0.5, 0.75, 10, 3),
                  lpbench::usage_error);
  CHECK_THROWS_AS(subadditivity_descends(half, 0.75, 0.5, 10, 3),
                  lpbench::usage_error);
}
