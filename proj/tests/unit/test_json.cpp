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
#include <string>

#include "lpbench/json_io.hpp"

using Complex = std::complex<double>;
using lpbench::Exponent;
using lpbench::NormedSpace;
using lpbench::ScalarFunction;
using lpbench::VectorFunction;
using lpbench::WeightedSet;
using nlohmann::json;

TEST_CASE("scalars cross the wire as numbers or [re, im] pairs") {
  CHECK(lpbench::scalar_to_json(2.5) == json(2.5));
  CHECK(lpbench::scalar_to_json(Complex{1.0, -2.0}) ==
        json::array({1.0, -2.0}));
  CHECK(lpbench::scalar_from_json<double>(json(2.5), "x") == 2.5);
  CHECK(lpbench::scalar_from_json<Complex>(json::array({1.0, -2.0}), "x") ==
        Complex{1.0, -2.0});
  CHECK_THROWS_WITH_AS(lpbench::scalar_from_json<double>(json("no"), "p.x"),
                       "p.x: expected a number", lpbench::schema_error);
  CHECK_THROWS_AS(
      lpbench::scalar_from_json<Complex>(json::array({1.0}), "x"),
      lpbench::schema_error);
}

TEST_CASE("exponents round trip, with inf spelled out") {
  CHECK(lpbench::to_json(Exponent::finite(2.0)) == json(2.0));
  CHECK(lpbench::to_json(Exponent::infinity()) == json("inf"));
  CHECK(lpbench::exponent_from_json(json(1.5), "p") == Exponent::finite(1.5));
  CHECK(lpbench::exponent_from_json(json("inf"), "p") ==
        Exponent::infinity());
  CHECK_THROWS_AS(lpbench::exponent_from_json(json("infinity"), "p"),
                  lpbench::schema_error);
  // Invalid exponent values surface as schema errors with the field path.
  CHECK_THROWS_AS(lpbench::exponent_from_json(json(-2.0), "payload.p"),
                  lpbench::schema_error);
  CHECK_THROWS_WITH_AS(lpbench::exponent_from_json(json(nullptr), "payload.p"),
                       "payload.p: exponent must be a number or \"inf\"",
                       lpbench::schema_error);
}

TEST_CASE("missing fields name their full path") {
  const json j{{"weights", json::array({1.0})}};
  CHECK_THROWS_WITH_AS(lpbench::require_field(j, "values", "payload"),
                       "payload.values: missing field", lpbench::schema_error);
  CHECK_THROWS_WITH_AS(lpbench::require_field(json(3), "x", "payload"),
                       "payload: expected an object", lpbench::schema_error);
  CHECK_THROWS_WITH_AS(
      lpbench::numbers_from_json(json::array({1.0, "two"}), "payload.w"),
      "payload.w[1]: expected a number", lpbench::schema_error);
}

TEST_CASE("weighted sets round trip and validate") {
  const WeightedSet set({"a", "b"}, {2.0, 0.5});
  const json j = lpbench::to_json(set);
  const WeightedSet back = lpbench::weighted_set_from_json(j, "payload");
  CHECK(back == set);

  // Labels are optional and default to indices.
  const WeightedSet indexed = lpbench::weighted_set_from_json(
      json{{"weights", json::array({1.0, 1.0})}}, "payload");
  CHECK(indexed.label(0) == "0");
  CHECK(indexed.label(1) == "1");

  // Construction failures surface as schema errors, not internal ones.
  CHECK_THROWS_AS(lpbench::weighted_set_from_json(
                      json{{"weights", json::array({-1.0})}}, "payload"),
                  lpbench::schema_error);
  CHECK_THROWS_AS(
      lpbench::weighted_set_from_json(
          json{{"weights", json::array({1.0, 1.0})},
               {"labels", json::array({"a", "a"})}},
          "payload"),
      lpbench::schema_error);
}

TEST_CASE("scalar functions round trip in both fields") {
  const WeightedSet set({"a", "b"}, {2.0, 0.5});
  const ScalarFunction<double> f(set, {1.5, -2.0});
  const json j = lpbench::to_json(f);
  const auto back = lpbench::scalar_function_from_json<double>(j, "payload");
  CHECK(back.domain() == set);
  CHECK(back.values() == f.values());

  const ScalarFunction<Complex> g(set, {Complex{1.0, 2.0}, Complex{0.0, -1.0}});
  const auto gback = lpbench::scalar_function_from_json<Complex>(
      lpbench::to_json(g), "payload");
  CHECK(gback.values() == g.values());

  CHECK_THROWS_AS(lpbench::scalar_function_from_json<double>(
                      json{{"weights", json::array({1.0, 1.0})},
                           {"values", json::array({1.0})}},
                      "payload"),
                  lpbench::schema_error);
}

TEST_CASE("normed spaces round trip by kind") {
  const auto l3 = NormedSpace<double>::lp(Exponent::finite(3.0), 2);
  const auto lback = lpbench::normed_space_from_json<double>(
      lpbench::to_json(l3), "payload");
  CHECK(lback == l3);

  const auto wlp = NormedSpace<double>::weighted_lp(Exponent::infinity(),
                                                    {2.0, 0.5, 1.0});
  const auto wback = lpbench::normed_space_from_json<double>(
      lpbench::to_json(wlp), "payload");
  CHECK(wback == wlp);

  CHECK_THROWS_WITH_AS(
      lpbench::normed_space_from_json<double>(
          json{{"dim", 2u}, {"norm", json{{"kind", "taxicab"}, {"p", 1.0}}}},
          "payload"),
      "payload.norm.kind: unknown kind 'taxicab'",
      lpbench::schema_error);
  // dim must be a nonnegative integer, and weights must match it.
  CHECK_THROWS_AS(lpbench::normed_space_from_json<double>(
                      json{{"dim", -2},
                           {"norm", json{{"kind", "lp"}, {"p", 2.0}}}},
                      "payload"),
                  lpbench::schema_error);
  CHECK_THROWS_AS(
      lpbench::normed_space_from_json<double>(
          json{{"dim", 3u},
               {"norm", json{{"kind", "weighted_lp"},
                             {"p", 2.0},
                             {"weights", json::array({1.0, 1.0})}}}},
          "payload"),
      lpbench::schema_error);
}

TEST_CASE("vector functions carry their codomain") {
  const WeightedSet set({"a", "b"}, {1.0, 2.0});
  const auto l2 = NormedSpace<double>::lp(Exponent::finite(2.0), 2);
  const VectorFunction<double> f(set, l2, {1.0, 2.0, 3.0, 4.0});
  const json j = lpbench::to_json(f);
  // Values nest per point.
  CHECK(j.at("values")[0] == json::array({1.0, 2.0}));
  const auto back = lpbench::vector_function_from_json<double>(j, "payload");
  CHECK(back.codomain() == l2);
  CHECK(back.flat_values() == f.flat_values());
}

TEST_CASE("certificates serialize status and slack") {
  const auto cert = lpbench::make_certificate(
      4.0, 5.0, json{{"note", "example"}});
  const json j = lpbench::to_json(cert);
  CHECK(j.at("lhs") == 4.0);
  CHECK(j.at("rhs") == 5.0);
  CHECK(j.at("slack") == 1.0);
  CHECK(j.at("status") == "holds");
  CHECK(j.at("witness").at("note") == "example");
}
