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

#include "lpbench/inequalities.hpp"

using Complex = std::complex<double>;
using lpbench::CertStatus;
using lpbench::Exponent;
using lpbench::HolderInstance;
using lpbench::ScalarFunction;
using lpbench::WeightedSet;

namespace {

const Exponent k1 = Exponent::finite(1.0);
const Exponent k2 = Exponent::finite(2.0);
const Exponent k3 = Exponent::finite(3.0);
const Exponent kInf = Exponent::infinity();

}  // namespace

TEST_CASE("holder pairing bound on a small real pair") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  const HolderInstance<double> inst{
      ScalarFunction<double>(e, {1.0, 2.0}),
      ScalarFunction<double>(e, {2.0, 1.0}), k2, k2};
  const auto cert = holder_certificate(inst);
  CHECK(cert.lhs == doctest::Approx(4.0));
  CHECK(cert.rhs == doctest::Approx(5.0));
  CHECK(cert.status == CertStatus::holds);
}

TEST_CASE("holder rejects non-conjugate exponents and mixed domains") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  const ScalarFunction<double> f(e, {1.0, 2.0});
  CHECK_THROWS_AS(
      holder_certificate(HolderInstance<double>{f, f, k2, k3}),
      lpbench::usage_error);
  const WeightedSet other = WeightedSet::indexed({2.0, 1.0});
  const ScalarFunction<double> g(other, {1.0, 2.0});
  CHECK_THROWS_AS(
      holder_certificate(HolderInstance<double>{f, g, k2, k2}),
      lpbench::domain_error);
}

TEST_CASE("pointwise young bound with equality at a^p = b^q") {
  const auto cert = young_certificate(2.0, 3.0, k2, k2);
  CHECK(cert.lhs == doctest::Approx(6.0));
  CHECK(cert.rhs == doctest::Approx(2.0 + 4.5));
  CHECK(cert.status == CertStatus::holds);

  // a^2 = b^2 at a = b: equality.
  const auto eq = young_certificate(1.7, 1.7, k2, k2);
  CHECK(eq.status == CertStatus::equality);
  // p = 3, q = 3/2: a^3 = b^(3/2) at a = 2^(1/2), b = 2.
  const auto eq2 =
      young_certificate(std::sqrt(2.0), 2.0, k3, Exponent::finite(1.5));
  CHECK(eq2.status == CertStatus::equality);

  CHECK_THROWS_AS(young_certificate(-1.0, 2.0, k2, k2),
                  lpbench::precondition_error);
  CHECK_THROWS_AS(young_certificate(1.0, 2.0, k1, kInf),
                  lpbench::usage_error);
}

TEST_CASE("normalized holder routes through the young middle term") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  const ScalarFunction<double> f1(e, {0.6, 0.8});
  const ScalarFunction<double> f2(e, {0.8, 0.6});
  const auto cert = holder_normalized_form(f1, f2, k2, k2);
  CHECK(cert.lhs == doctest::Approx(0.96));
  CHECK(cert.rhs == 1.0);
  CHECK(cert.status == CertStatus::holds);
  // lhs <= young middle <= 1 is the proof route.
  const double middle = cert.witness.at("young_middle").get<double>();
  CHECK(cert.lhs <= middle + 1e-12);
  CHECK(middle <= 1.0 + 1e-12);

  const ScalarFunction<double> big(e, {3.0, 4.0});
  CHECK_THROWS_AS(holder_normalized_form(big, f2, k2, k2),
                  lpbench::precondition_error);
}

TEST_CASE("product holder with three exponents") {
  const WeightedSet e = WeightedSet::indexed({0.5, 2.0, 1.0});
  const ScalarFunction<double> f1(e, {1.0, -2.0, 0.5});
  const ScalarFunction<double> f2(e, {3.0, 0.25, -1.0});
  const auto cert = product_holder_certificate(f1, f2, k2, k2, k1);
  CHECK(cert.status != CertStatus::violated);
  CHECK(cert.lhs ==
        doctest::Approx(weighted_norm(pointwise_multiply(f1, f2), k1)));
  CHECK(cert.rhs ==
        doctest::Approx(weighted_norm(f1, k2) * weighted_norm(f2, k2)));
  // 1/r must equal 1/p + 1/q.
  CHECK_THROWS_AS(product_holder_certificate(f1, f2, k2, k2, k2),
                  lpbench::usage_error);
}

TEST_CASE("interpolation between two exponents") {
  const WeightedSet e = WeightedSet::indexed({1.0, 2.0, 0.5});
  const ScalarFunction<double> f(e, {2.0, -1.0, 4.0});

  // theta = 1/2 between 1 and inf lands on r = 2.
  const auto mid = interpolation_certificate(f, k1, kInf, 0.5);
  CHECK(mid.status != CertStatus::violated);
  CHECK(mid.lhs == doctest::Approx(weighted_norm(f, k2)));
  CHECK(mid.rhs == doctest::Approx(std::sqrt(weighted_norm(f, k1) *
                                             weighted_norm(f, kInf))));
  CHECK(mid.witness.at("r").get<std::string>() == k2.str());

  // Endpoints are equalities by construction.
  CHECK(interpolation_certificate(f, k1, k3, 1.0).status ==
        CertStatus::equality);
  CHECK(interpolation_certificate(f, k1, k3, 0.0).status ==
        CertStatus::equality);

  CHECK_THROWS_AS(interpolation_certificate(f, k3, k1, 0.5),
                  lpbench::usage_error);
  CHECK_THROWS_AS(interpolation_certificate(f, k1, k3, 1.5),
                  lpbench::usage_error);
}

TEST_CASE("literal interpolation variant fails on a singleton") {
  const WeightedSet e = WeightedSet::indexed({1.0});
  const ScalarFunction<double> f(e, {0.5});
  const auto cert = interpolation_paper_literal_certificate(f, k2, k2);
  CHECK(cert.lhs == doctest::Approx(0.5));
  CHECK(cert.rhs == doctest::Approx(0.0625));
  CHECK(cert.status == CertStatus::violated);
}

TEST_CASE("minkowski with the two-piece holder split") {
  const WeightedSet e = WeightedSet::indexed({1.0, 0.5, 2.0});
  const ScalarFunction<double> f1(e, {1.0, -2.0, 0.5});
  const ScalarFunction<double> f2(e, {0.25, 1.0, -1.5});

  const auto r3 = minkowski_certificate(f1, f2, k3);
  CHECK(r3.certificate.status != CertStatus::violated);
  REQUIRE(r3.split.has_value());
  const auto& s = *r3.split;
  CHECK(s.power_sum <= s.s1 + s.s2 + 1e-12);
  CHECK(s.s1 <= s.bound1 * (1.0 + 1e-12));
  CHECK(s.s2 <= s.bound2 * (1.0 + 1e-12));

  // p = 1 and p = inf carry no split.
  CHECK_FALSE(minkowski_certificate(f1, f2, k1).split.has_value());
  CHECK_FALSE(minkowski_certificate(f1, f2, kInf).split.has_value());
  // p = 1 is pointwise equality when signs align.
  const ScalarFunction<double> pos1(e, {1.0, 2.0, 0.5});
  const ScalarFunction<double> pos2(e, {0.25, 1.0, 1.5});
  CHECK(minkowski_certificate(pos1, pos2, k1).certificate.status ==
        CertStatus::equality);

  CHECK_THROWS_AS(minkowski_certificate(f1, f2, Exponent::finite(0.5)),
                  lpbench::usage_error);
}

TEST_CASE("holder equality witness saturates the bound") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  SUBCASE("real") {
    const ScalarFunction<double> h(e, {2.0, -1.0});
    const auto f = holder_equality_witness(h, k2, k2);
    CHECK(f.value(0) == doctest::Approx(2.0));
    CHECK(f.value(1) == doctest::Approx(-1.0));
    const auto cert = holder_certificate(HolderInstance<double>{f, h, k2, k2});
    CHECK(cert.status == CertStatus::equality);
  }
  SUBCASE("complex, non-conjugate exponent pair") {
    const ScalarFunction<Complex> h(e, {Complex{3.0, 4.0}, Complex{1.0, 0.0}});
    const Exponent p = Exponent::finite(3.0);
    const Exponent q = Exponent::finite(1.5);
    const auto f = holder_equality_witness(h, p, q);
    const auto cert = holder_certificate(HolderInstance<Complex>{f, h, p, q});
    CHECK(cert.status == CertStatus::equality);
    // The pairing is real and positive at equality.
    CHECK(cert.lhs == doctest::Approx(cert.rhs));
  }
  SUBCASE("zero function is degenerate") {
    const ScalarFunction<double> z(e, {0.0, 0.0});
    CHECK_THROWS_AS(holder_equality_witness(z, k2, k2),
                    lpbench::degenerate_error);
  }
}
