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

#include <limits>

#include "lpbench/errors.hpp"
#include "lpbench/exponent.hpp"

using lpbench::Exponent;
using lpbench::conjugate;
using lpbench::is_conjugate_pair;

TEST_CASE("construction and the infinite exponent") {
  CHECK(Exponent().value() == 2.0);
  CHECK(Exponent::finite(1.5).value() == 1.5);
  CHECK(Exponent::infinity().is_infinite());
  CHECK(Exponent::infinity().reciprocal() == 0.0);
  CHECK(Exponent::finite(4.0).reciprocal() == 0.25);
  CHECK(Exponent::from_value(2.0) == Exponent::finite(2.0));
  CHECK(Exponent::from_value(std::numeric_limits<double>::infinity())
            .is_infinite());
  CHECK_THROWS_AS(Exponent::finite(0.0), lpbench::usage_error);
  CHECK_THROWS_AS(Exponent::finite(-2.0), lpbench::usage_error);
  CHECK_THROWS_AS(
      Exponent::finite(std::numeric_limits<double>::infinity()),
      lpbench::usage_error);
}

TEST_CASE("from_reciprocal inverts reciprocal and absorbs rounding dust") {
  CHECK(Exponent::from_reciprocal(0.5) == Exponent::finite(2.0));
  CHECK(Exponent::from_reciprocal(0.0).is_infinite());
  // Dust below the absolute floor comes from cancellations like
  // 1/r - 1/q1 with r = q1; it means "infinity", not an error.
  CHECK(Exponent::from_reciprocal(1e-13).is_infinite());
  CHECK(Exponent::from_reciprocal(-1e-13).is_infinite());
  CHECK_THROWS_AS(Exponent::from_reciprocal(-0.5), lpbench::usage_error);
}

TEST_CASE("ordering treats infinity as the top") {
  CHECK(Exponent::finite(1.0) < Exponent::finite(2.0));
  CHECK(Exponent::finite(2.0) < Exponent::infinity());
  CHECK(Exponent::infinity() <= Exponent::infinity());
  CHECK(Exponent::infinity() > Exponent::finite(1000.0));
  CHECK(Exponent::finite(3.0) >= Exponent::finite(3.0));
  CHECK(Exponent::finite(3.0) != Exponent::infinity());
}

TEST_CASE("conjugate pairs") {
  CHECK(conjugate(Exponent::finite(2.0)) == Exponent::finite(2.0));
  CHECK(conjugate(Exponent::finite(1.0)).is_infinite());
  CHECK(conjugate(Exponent::infinity()) == Exponent::finite(1.0));
  CHECK(conjugate(Exponent::finite(4.0)).value() ==
        doctest::Approx(4.0 / 3.0));
  CHECK_THROWS_AS(conjugate(Exponent::finite(0.5)), lpbench::usage_error);

  CHECK(is_conjugate_pair(Exponent::finite(2.0), Exponent::finite(2.0)));
  CHECK(is_conjugate_pair(Exponent::finite(1.0), Exponent::infinity()));
  CHECK(is_conjugate_pair(Exponent::finite(3.0), Exponent::finite(1.5)));
  CHECK_FALSE(is_conjugate_pair(Exponent::finite(2.0), Exponent::finite(3.0)));
}

TEST_CASE("conjugation is an involution on [1, inf]") {
  for (double p : {1.0, 1.25, 1.5, 2.0, 3.0, 7.0, 100.0}) {
    const Exponent e = Exponent::finite(p);
    CHECK(conjugate(conjugate(e)).value() == doctest::Approx(p).epsilon(1e-12));
    CHECK(is_conjugate_pair(e, conjugate(e)));
  }
  CHECK(conjugate(conjugate(Exponent::infinity())).is_infinite());
}

TEST_CASE("str names the value") {
  CHECK(Exponent::infinity().str() == "inf");
  CHECK(Exponent::finite(2.0).str().substr(0, 4) == "2.00");
}
