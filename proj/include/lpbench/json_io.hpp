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

#include <complex>
#include <json.hpp>
#include <string>
#include <vector>

#include "lpbench/certificate.hpp"
#include "lpbench/errors.hpp"
#include "lpbench/exponent.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/normed_space.hpp"
#include "lpbench/scalar.hpp"
#include "lpbench/weighted_set.hpp"

// JSON wire formats. Weighted sets and functions share one object shape
// ({"labels": [...], "weights": [...], "values": [...]}); complex scalars
// are [re, im] pairs; exponents are numbers or the string "inf". Parsing
// raises schema_error with the JSON path of the offending field.

namespace lpbench {

using json = nlohmann::json;

inline json scalar_to_json(double x) { return json(x); }
inline json scalar_to_json(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

template <ScalarType T>
T scalar_from_json(const json& j, const std::string& path) {
  if constexpr (is_complex_v<T>) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number()) {
      throw schema_error(path + ": complex scalar must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
  } else {
    if (!j.is_number()) {
      throw schema_error(path + ": expected a number");
    }
    return j.get<double>();
  }
}

inline json to_json(const Exponent& p) {
  return p.is_infinite() ? json("inf") : json(p.value());
}

inline Exponent exponent_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Exponent::infinity();
    throw schema_error(path + ": exponent string must be \"inf\"");
  }
  if (!j.is_number()) {
    throw schema_error(path + ": exponent must be a number or \"inf\"");
  }
  try {
    return Exponent::finite(j.get<double>());
  } catch (const usage_error& e) {
    throw schema_error(path + ": " + e.what());
  }
}

inline const json& require_field(const json& j, const char* key,
                                 const std::string& path) {
  if (!j.is_object()) throw schema_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw schema_error(path + "." + key + ": missing field");
  }
  return *it;
}

inline std::vector<double> numbers_from_json(const json& j,
                                             const std::string& path) {
  if (!j.is_array()) throw schema_error(path + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw schema_error(path + "[" + std::to_string(i) + "]: expected a number");
    }
    out.push_back(j[i].get<double>());
  }
  return out;
}

inline json to_json(const WeightedSet& set) {
  return json{{"labels", set.labels()}, {"weights", set.weights()}};
}

// Labels may be omitted; they default to "0".."n-1".
inline WeightedSet weighted_set_from_json(const json& j,
                                          const std::string& path) {
  std::vector<double> weights =
      numbers_from_json(require_field(j, "weights", path), path + ".weights");
  try {
    if (j.contains("labels")) {
      const json& jl = j["labels"];
      if (!jl.is_array()) {
        throw schema_error(path + ".labels: expected an array");
      }
      std::vector<std::string> labels;
      labels.reserve(jl.size());
      for (std::size_t i = 0; i < jl.size(); ++i) {
        if (!jl[i].is_string()) {
          throw schema_error(path + ".labels[" + std::to_string(i) +
                             "]: expected a string");
        }
        labels.push_back(jl[i].get<std::string>());
      }
      return WeightedSet(std::move(labels), std::move(weights));
    }
    return WeightedSet::indexed(std::move(weights));
  } catch (const schema_error&) {
    throw;
  } catch (const error& e) {
    throw schema_error(path + ": " + e.what());
  }
}

template <ScalarType T>
json to_json(const ScalarFunction<T>& f) {
  json values = json::array();
  for (const T& v : f.values()) values.push_back(scalar_to_json(v));
  return json{{"labels", f.domain().labels()},
              {"weights", f.domain().weights()},
              {"values", values}};
}

template <ScalarType T>
ScalarFunction<T> scalar_function_from_json(const json& j,
                                            const std::string& path) {
  WeightedSet set = weighted_set_from_json(j, path);
  const json& jv = require_field(j, "values", path);
  if (!jv.is_array()) throw schema_error(path + ".values: expected an array");
  std::vector<T> values;
  values.reserve(jv.size());
  for (std::size_t i = 0; i < jv.size(); ++i) {
    values.push_back(
        scalar_from_json<T>(jv[i], path + ".values[" + std::to_string(i) + "]"));
  }
  try {
    return ScalarFunction<T>(std::move(set), std::move(values));
  } catch (const error& e) {
    throw schema_error(path + ": " + e.what());
  }
}

template <ScalarType T>
json to_json(const NormedSpace<T>& space) {
  json norm;
  switch (space.kind()) {
    case NormedSpace<T>::Kind::lp:
      norm = json{{"kind", "lp"}, {"p", to_json(space.exponent())}};
      break;
    case NormedSpace<T>::Kind::weighted_lp:
      norm = json{{"kind", "weighted_lp"},
                  {"p", to_json(space.exponent())},
                  {"weights", space.lp_weights()}};
      break;
    case NormedSpace<T>::Kind::custom:
      throw usage_error("custom normed spaces have no JSON form");
  }
  return json{{"dim", space.dim()}, {"norm", norm}};
}

template <ScalarType T>
NormedSpace<T> normed_space_from_json(const json& j, const std::string& path) {
  const json& jd = require_field(j, "dim", path);
  if (!jd.is_number_unsigned()) {
    throw schema_error(path + ".dim: expected a positive integer");
  }
  const std::size_t dim = jd.get<std::size_t>();
  const json& jn = require_field(j, "norm", path);
  const json& jk = require_field(jn, "kind", path + ".norm");
  if (!jk.is_string()) {
    throw schema_error(path + ".norm.kind: expected a string");
  }
  const std::string kind = jk.get<std::string>();
  const Exponent p =
      exponent_from_json(require_field(jn, "p", path + ".norm"), path + ".norm.p");
  try {
    if (kind == "lp") return NormedSpace<T>::lp(p, dim);
    if (kind == "weighted_lp") {
      std::vector<double> w = numbers_from_json(
          require_field(jn, "weights", path + ".norm"), path + ".norm.weights");
      if (w.size() != dim) {
        throw schema_error(path + ".norm.weights: expected " +
                           std::to_string(dim) + " entries");
      }
      return NormedSpace<T>::weighted_lp(p, std::move(w));
    }
  } catch (const schema_error&) {
    throw;
  } catch (const error& e) {
    throw schema_error(path + ".norm: " + e.what());
  }
  throw schema_error(path + ".norm.kind: unknown kind '" + kind + "'");
}

template <ScalarType T>
json to_json(const VectorFunction<T>& f) {
  json values = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    json point = json::array();
    for (const T& v : f.value(i)) point.push_back(scalar_to_json(v));
    values.push_back(std::move(point));
  }
  return json{{"labels", f.domain().labels()},
              {"weights", f.domain().weights()},
              {"values", values},
              {"codomain", to_json(f.codomain())}};
}

template <ScalarType T>
VectorFunction<T> vector_function_from_json(const json& j,
                                            const std::string& path) {
  WeightedSet set = weighted_set_from_json(j, path);
  NormedSpace<T> codomain = normed_space_from_json<T>(
      require_field(j, "codomain", path), path + ".codomain");
  const json& jv = require_field(j, "values", path);
  if (!jv.is_array()) throw schema_error(path + ".values: expected an array");
  std::vector<T> flat;
  flat.reserve(jv.size() * codomain.dim());
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string vpath = path + ".values[" + std::to_string(i) + "]";
    if (!jv[i].is_array()) throw schema_error(vpath + ": expected an array");
    for (std::size_t k = 0; k < jv[i].size(); ++k) {
      flat.push_back(scalar_from_json<T>(
          jv[i][k], vpath + "[" + std::to_string(k) + "]"));
    }
  }
  try {
    return VectorFunction<T>(std::move(set), std::move(codomain),
                             std::move(flat));
  } catch (const error& e) {
    throw schema_error(path + ": " + e.what());
  }
}

inline json to_json(const Certificate& cert) {
  return json{{"lhs", cert.lhs},
              {"rhs", cert.rhs},
              {"slack", cert.slack()},
              {"status", to_string(cert.status)},
              {"witness", cert.witness}};
}

}  // namespace lpbench
