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

#include <complex>
#include <vector>

#include "lpbench/errors.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/normed_space.hpp"
#include "lpbench/weighted_set.hpp"

using Complex = std::complex<double>;
using lpbench::Exponent;
using lpbench::NormedSpace;
using lpbench::ScalarFunction;
using lpbench::VectorFunction;
using lpbench::WeightedSet;

TEST_CASE("weighted set basics") {
  const WeightedSet e({"a", "b", "c"}, {1.0, 2.0, 0.5});
  CHECK(e.size() == 3);
  CHECK(e.label(1) == "b");
  CHECK(e.weight(2) == 0.5);
  CHECK(e.total_weight() == 3.5);
  CHECK(e.index_of("c") == 2);
  CHECK_THROWS_AS(e.index_of("d"), lpbench::domain_error);
  CHECK_FALSE(e.is_unit());
  CHECK_FALSE(e.is_probability());

  const WeightedSet unit = WeightedSet::indexed({1.0, 1.0});
  CHECK(unit.labels() == std::vector<std::string>{"0", "1"});
  CHECK(unit.is_unit());

  const WeightedSet prob = WeightedSet::indexed({0.25, 0.75});
  CHECK(prob.is_probability());
}

TEST_CASE("weighted set rejects bad construction") {
  CHECK_THROWS_AS(WeightedSet({"a"}, {1.0, 2.0}), lpbench::shape_error);
  CHECK_THROWS_AS(WeightedSet({"a"}, {0.0}), lpbench::precondition_error);
  CHECK_THROWS_AS(WeightedSet({"a"}, {-1.0}), lpbench::precondition_error);
  CHECK_THROWS_AS(WeightedSet({"a", "a"}, {1.0, 1.0}), lpbench::domain_error);
  CHECK_THROWS_AS(WeightedSet({}, {}), lpbench::shape_error);
}

TEST_CASE("product sets keep factors and multiply weights") {
  const WeightedSet e1({"x", "y"}, {2.0, 3.0});
  const WeightedSet e2({"0", "1", "2"}, {1.0, 0.5, 4.0});
  const WeightedSet prod = WeightedSet::product(e1, e2);
  CHECK(prod.size() == 6);
  CHECK(prod.is_product());
  CHECK(prod.factor1() == e1);
  CHECK(prod.factor2() == e2);
  // Row-major: first factor slow.
  CHECK(prod.label(0) == "x|0");
  CHECK(prod.label(3) == "y|0");
  CHECK(prod.weight(1) == 1.0);   // 2 * 0.5
  CHECK(prod.weight(5) == 12.0);  // 3 * 4
  CHECK_FALSE(e1.is_product());
  CHECK_THROWS_AS(e1.factor1(), lpbench::usage_error);
}

TEST_CASE("scalar functions validate shape and share domains") {
  const WeightedSet e({"a", "b"}, {1.0, 2.0});
  const ScalarFunction<double> f(e, {3.0, -1.0});
  CHECK(f.size() == 2);
  CHECK(f.value(0) == 3.0);
  CHECK(f.at("b") == -1.0);
  CHECK_FALSE(f.is_zero());
  CHECK(ScalarFunction<double>(e, {0.0, 0.0}).is_zero());
  CHECK_THROWS_AS(ScalarFunction<double>(e, {1.0}), lpbench::shape_error);

  const auto g = f.with_values({1.0, 1.0});
  CHECK(g.domain_ptr() == f.domain_ptr());
}

TEST_CASE("pointwise operations") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0, 1.0});
  const ScalarFunction<double> f(e, {1.0, 2.0, 3.0});
  const ScalarFunction<double> g = f.with_values({2.0, 0.0, -1.0});
  CHECK(pointwise_multiply(f, g).values() ==
        std::vector<double>{2.0, 0.0, -3.0});
  CHECK(add(f, g).values() == std::vector<double>{3.0, 2.0, 2.0});
  CHECK(lpbench::scale(2.0, f).values() == std::vector<double>{2.0, 4.0, 6.0});

  const ScalarFunction<double> d = lpbench::delta<double>(e, "1");
  CHECK(d.values() == std::vector<double>{0.0, 1.0, 0.0});

  const WeightedSet other = WeightedSet::indexed({1.0, 1.0});
  const ScalarFunction<double> h(other, {1.0, 1.0});
  CHECK_THROWS_AS(pointwise_multiply(f, h), lpbench::domain_error);
}

TEST_CASE("normed spaces evaluate and compare structurally") {
  const NormedSpace<double> l2 = NormedSpace<double>::lp(Exponent::finite(2.0), 2);
  const std::vector<double> v{3.0, 4.0};
  CHECK(l2.evaluate(v) == doctest::Approx(5.0));
  CHECK(l2.claims_triangle());
  CHECK(l2.declared_subadditivity() == 1.0);

  const NormedSpace<double> half =
      NormedSpace<double>::weighted_lp(Exponent::finite(0.5), {1.0, 1.0});
  CHECK_FALSE(half.claims_triangle());
  CHECK(half.declared_subadditivity() == 0.5);
  // (sum |v_i|^(1/2))^2 for (1, 1) is 4.
  CHECK(half.evaluate(std::vector<double>{1.0, 1.0}) == doctest::Approx(4.0));

  CHECK(l2 == NormedSpace<double>::lp(Exponent::finite(2.0), 2));
  CHECK(l2 != NormedSpace<double>::lp(Exponent::finite(3.0), 2));
  CHECK(l2 != half);
  CHECK_THROWS_AS(
      NormedSpace<double>::weighted_lp(Exponent::finite(2.0), {1.0, 0.0}),
      lpbench::precondition_error);
  CHECK_THROWS_AS(l2.evaluate(std::vector<double>{1.0}),
                  lpbench::shape_error);

  const NormedSpace<double> scalars = NormedSpace<double>::scalars();
  CHECK(scalars.dim() == 1);
  CHECK(scalars.evaluate(std::vector<double>{-7.0}) == 7.0);
}

TEST_CASE("custom spaces carry declarations but no lp structure") {
  const auto sup = NormedSpace<double>::custom(
      2,
      [](std::span<const double> v) {
        return std::max(std::abs(v[0]), std::abs(v[1]));
      },
      "sup2", 1.0);
  CHECK(sup.evaluate(std::vector<double>{-3.0, 2.0}) == 3.0);
  CHECK(sup.claims_triangle());
  CHECK_THROWS_AS(sup.exponent(), lpbench::usage_error);
  CHECK_THROWS_AS(sup.lp_weights(), lpbench::usage_error);
}

TEST_CASE("vector functions store values row-major") {
  const WeightedSet e = WeightedSet::indexed({1.0, 2.0});
  const NormedSpace<double> l2 = NormedSpace<double>::lp(Exponent::finite(2.0), 2);
  const VectorFunction<double> f(e, l2, {3.0, 4.0, 1.0, 0.0});
  CHECK(f.size() == 2);
  CHECK(f.dim() == 2);
  CHECK(f.value(0)[1] == 4.0);
  CHECK(f.value(1)[0] == 1.0);
  CHECK_THROWS_AS(VectorFunction<double>(e, l2, {1.0, 2.0, 3.0}),
                  lpbench::shape_error);
}

TEST_CASE("curry and uncurry are inverse identifications") {
  const WeightedSet e1({"x", "y"}, {2.0, 3.0});
  const WeightedSet e2({"0", "1"}, {1.0, 0.5});
  const WeightedSet prod = WeightedSet::product(e1, e2);
  const ScalarFunction<double> f(prod, {1.0, 2.0, 3.0, 4.0});

  const VectorFunction<double> g = lpbench::curry(f);
  CHECK(g.domain() == e1);
  CHECK(g.dim() == 2);
  CHECK(g.value(0)[0] == 1.0);
  CHECK(g.value(1)[1] == 4.0);

  const ScalarFunction<double> back = lpbench::uncurry(g, e2);
  CHECK(back.values() == f.values());
  CHECK(back.domain() == f.domain());

  const ScalarFunction<double> flat(e1, {1.0, 2.0});
  CHECK_THROWS_AS(lpbench::curry(flat), lpbench::usage_error);
}

TEST_CASE("complex scalar functions") {
  const WeightedSet e = WeightedSet::indexed({1.0, 1.0});
  const ScalarFunction<Complex> f(e, {Complex{3.0, 4.0}, Complex{0.0, 0.0}});
  CHECK(lpbench::abs_value(f.value(0)) == doctest::Approx(5.0));
  CHECK_FALSE(f.is_zero());
}
