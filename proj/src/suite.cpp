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

#include "lpbench/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lpbench/errors.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/inequalities.hpp"
#include "lpbench/json_io.hpp"
#include "lpbench/lifts.hpp"
#include "lpbench/normed_space.hpp"
#include "lpbench/norms.hpp"
#include "lpbench/operators.hpp"
#include "lpbench/opnorm.hpp"
#include "lpbench/rng.hpp"
#include "lpbench/scalar.hpp"
#include "lpbench/tracenorm.hpp"
#include "lpbench/transfer.hpp"
#include "lpbench/weighted_set.hpp"

namespace lpbench {

const char* to_string(Field field) {
  return field == Field::complex ? "complex" : "real";
}

const char* to_string(WeightMode mode) {
  switch (mode) {
    case WeightMode::unit:
      return "unit";
    case WeightMode::probability:
      return "probability";
    case WeightMode::random:
      return "random";
  }
  return "unknown";
}

Field field_from_string(const std::string& s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::complex;
  throw usage_error("field must be 'real' or 'complex', got '" + s + "'");
}

WeightMode weight_mode_from_string(const std::string& s) {
  if (s == "unit") return WeightMode::unit;
  if (s == "probability") return WeightMode::probability;
  if (s == "random") return WeightMode::random;
  throw usage_error("weights must be 'unit', 'probability' or 'random', got '" +
                    s + "'");
}

std::vector<Exponent> default_exponent_pool() {
  return {Exponent::finite(0.25), Exponent::finite(0.5),
          Exponent::finite(0.75), Exponent::finite(1.0),
          Exponent::finite(4.0 / 3.0), Exponent::finite(1.5),
          Exponent::finite(2.0), Exponent::finite(3.0),
          Exponent::finite(4.0), Exponent::infinity()};
}

namespace {

using Complex = std::complex<double>;

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Deviations that must be structurally zero (bit-level contracts) report
// this sentinel instead of infinity, which JSON cannot carry.
constexpr double kBrokenContract = 1e9;

// ---------------------------------------------------------------------------
// Random instance generation.

std::vector<double> gen_weights(Rng& rng, WeightMode mode, std::size_t n) {
  std::vector<double> w(n, 1.0);
  switch (mode) {
    case WeightMode::unit:
      break;
    case WeightMode::probability: {
      double total = 0.0;
      for (double& x : w) {
        x = rng.uniform(0.05, 1.0);
        total += x;
      }
      for (double& x : w) x /= total;
      break;
    }
    case WeightMode::random:
      for (double& x : w) x = std::pow(10.0, rng.uniform(-1.0, 1.0));
      break;
  }
  return w;
}

std::shared_ptr<const WeightedSet> gen_domain(
    Rng& rng, const SuiteConfig& cfg, int cap,
    std::optional<WeightMode> force = std::nullopt) {
  const int lo = cfg.n_min;
  const int hi = std::max(lo, std::min(cfg.n_max, cap));
  const auto n = static_cast<std::size_t>(rng.uniform_int(lo, hi));
  return std::make_shared<const WeightedSet>(
      WeightedSet::indexed(gen_weights(rng, force.value_or(cfg.weight_mode), n)));
}

template <ScalarType T>
ScalarFunction<T> gen_function(Rng& rng,
                               std::shared_ptr<const WeightedSet> domain,
                               double sparsity = 0.15) {
  std::vector<T> v = detail::random_vector<T>(rng, domain->size(), sparsity);
  return ScalarFunction<T>(std::move(domain), std::move(v));
}

template <ScalarType T>
T gen_scalar(Rng& rng) {
  const double scale = std::pow(10.0, rng.uniform(-1.0, 1.0));
  if constexpr (is_complex_v<T>) {
    return rng.gaussian_complex() * scale;
  } else {
    return rng.gaussian() * scale;
  }
}

template <typename Pred>
Exponent pick_exponent(Rng& rng, const std::vector<Exponent>& pool, Pred pred,
                       const Exponent& fallback) {
  std::vector<const Exponent*> matching;
  for (const Exponent& e : pool) {
    if (pred(e)) matching.push_back(&e);
  }
  if (matching.empty()) return fallback;
  return *matching[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(matching.size()) - 1))];
}

const auto any_exponent = [](const Exponent&) { return true; };
const auto at_least_one_exp = [](const Exponent& e) {
  return e.is_infinite() || e.value() >= 1.0;
};
const auto finite_exp = [](const Exponent& e) { return e.is_finite(); };
const auto finite_above_one = [](const Exponent& e) {
  return e.is_finite() && e.value() > 1.0;
};
const auto finite_at_most_one = [](const Exponent& e) {
  return e.is_finite() && e.value() <= 1.0;
};
const auto finite_at_least_one = [](const Exponent& e) {
  return e.is_finite() && e.value() >= 1.0;
};

// ---------------------------------------------------------------------------
// Instance field plumbing. Instances are the unit of replay: everything an
// evaluation needs, including tolerances and budgets, is stored inline.

bool instance_is_complex(const json& inst) {
  return inst.value("field", std::string("real")) == "complex";
}

double tol_of(const json& inst) { return inst.value("rel_tol", kRelTol); }

json base_instance(const char* name, const SuiteConfig& cfg) {
  return json{{"name", name},
              {"field", to_string(cfg.field)},
              {"rel_tol", cfg.rel_tol}};
}

template <ScalarType T>
ScalarFunction<T> fn_of(const json& inst, const char* key) {
  return scalar_function_from_json<T>(require_field(inst, key, "instance"),
                                      std::string("instance.") + key);
}

Exponent exp_of(const json& inst, const char* key) {
  return exponent_from_json(require_field(inst, key, "instance"),
                            std::string("instance.") + key);
}

double num_of(const json& inst, const char* key) {
  const json& j = require_field(inst, key, "instance");
  if (!j.is_number()) {
    throw schema_error(std::string("instance.") + key + ": expected a number");
  }
  return j.get<double>();
}

std::uint64_t seed_of(const json& inst, const char* key) {
  const json& j = require_field(inst, key, "instance");
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw schema_error(std::string("instance.") + key +
                       ": expected an integer");
  }
  return j.get<std::uint64_t>();
}

template <ScalarType T>
T scalar_of(const json& inst, const char* key) {
  return scalar_from_json<T>(require_field(inst, key, "instance"),
                             std::string("instance.") + key);
}

template <ScalarType T>
json kernel_to_json(const KernelOperator<T>& a) {
  json entries = json::array();
  for (const T& v : a.kernel()) entries.push_back(scalar_to_json(v));
  return json{{"domain", to_json(a.domain())}, {"kernel", entries}};
}

template <ScalarType T>
KernelOperator<T> kernel_of_json(const json& j, const std::string& path) {
  WeightedSet domain =
      weighted_set_from_json(require_field(j, "domain", path), path + ".domain");
  const json& jk = require_field(j, "kernel", path);
  if (!jk.is_array()) throw schema_error(path + ".kernel: expected an array");
  std::vector<T> entries;
  entries.reserve(jk.size());
  for (std::size_t i = 0; i < jk.size(); ++i) {
    entries.push_back(scalar_from_json<T>(
        jk[i], path + ".kernel[" + std::to_string(i) + "]"));
  }
  try {
    return KernelOperator<T>(
        std::make_shared<const WeightedSet>(std::move(domain)),
        std::move(entries));
  } catch (const error& e) {
    throw schema_error(path + ": " + e.what());
  }
}

template <ScalarType T>
KernelOperator<T> gen_kernel(Rng& rng, std::shared_ptr<const WeightedSet> dom,
                             double sparsity = 0.1) {
  const std::size_t n = dom->size();
  std::vector<T> entries = detail::random_vector<T>(rng, n * n, sparsity);
  return KernelOperator<T>(std::move(dom), std::move(entries));
}

json budget_to_json(const AscentBudget& b) {
  return json{{"restarts", b.restarts},
              {"iterations", b.iterations},
              {"seed", b.seed}};
}

AscentBudget budget_of(const json& inst) {
  AscentBudget b{8, 150, 0};
  if (inst.contains("budget")) {
    const json& j = inst["budget"];
    b.restarts = j.value("restarts", b.restarts);
    b.iterations = j.value("iterations", b.iterations);
    b.seed = j.value("seed", b.seed);
  }
  return b;
}

// A deviation claim |measured| <= tol * max(1, scale), phrased as a
// certificate so every property reports through the same channel.
Certificate deviation_certificate(double dev, double scale, double tol,
                                  json witness = nullptr) {
  return make_certificate(dev, tol * std::max(1.0, scale),
                          std::move(witness));
}

// Violated members dominate; otherwise the smallest slack is the story.
Certificate fold_worst(std::vector<Certificate> certs) {
  std::size_t best = 0;
  bool best_violated = certs[0].status == CertStatus::violated;
  for (std::size_t i = 1; i < certs.size(); ++i) {
    const bool violated = certs[i].status == CertStatus::violated;
    if (violated != best_violated ? violated
                                  : certs[i].slack() < certs[best].slack()) {
      best = i;
      best_violated = violated;
    }
  }
  return std::move(certs[best]);
}

template <typename RealFn, typename ComplexFn>
Certificate dispatch_field(const json& inst, RealFn real_fn,
                           ComplexFn complex_fn) {
  return instance_is_complex(inst) ? complex_fn(inst) : real_fn(inst);
}

// ---------------------------------------------------------------------------
// norms properties.

json gen_homogeneity(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.homogeneity", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                    Exponent::finite(2.0)));
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
    inst["alpha"] = scalar_to_json(rng.coin(0.05) ? Complex{}
                                                  : gen_scalar<Complex>(rng));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
    inst["alpha"] =
        scalar_to_json(rng.coin(0.05) ? 0.0 : gen_scalar<double>(rng));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_homogeneity(const json& inst) {
  const auto f = fn_of<T>(inst, "f");
  const T alpha = scalar_of<T>(inst, "alpha");
  const Exponent p = exp_of(inst, "p");
  const double lhs = weighted_norm(scale(alpha, f), p);
  const double rhs = abs_value(alpha) * weighted_norm(f, p);
  return deviation_certificate(std::abs(lhs - rhs), rhs, tol_of(inst),
                               json{{"lhs", lhs}, {"rhs", rhs}});
}

json gen_power_identity(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.power_identity", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, finite_exp,
                                    Exponent::finite(2.0)));
  inst["t"] = rng.uniform(0.3, 2.5);
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

// ||  |f|^t  ||_p = ||f||_{pt}^t.
template <ScalarType T>
Certificate eval_power_identity(const json& inst) {
  const auto f = fn_of<T>(inst, "f");
  const Exponent p = exp_of(inst, "p");
  const double t = num_of(inst, "t");
  std::vector<T> powered(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    powered[i] = T{pow_abs(abs_value(f.value(i)), t)};
  }
  const double lhs =
      weighted_norm(ScalarFunction<T>(f.domain_ptr(), std::move(powered)), p);
  const double rhs =
      pow_abs(weighted_norm(f, Exponent::finite(p.value() * t)), t);
  return deviation_certificate(std::abs(lhs - rhs), rhs, tol_of(inst),
                               json{{"lhs", lhs}, {"rhs", rhs}});
}

json gen_ppower_subadditivity(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.ppower_subadditivity", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, finite_at_most_one,
                                    Exponent::finite(0.5)));
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
    inst["g"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
    inst["g"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_ppower_subadditivity(const json& inst) {
  const auto f = fn_of<T>(inst, "f");
  const auto g = fn_of<T>(inst, "g");
  const Exponent p = exp_of(inst, "p");
  const double pv = p.value();
  const double lhs = pow_abs(weighted_norm(add(f, g), p), pv);
  const double rhs =
      pow_abs(weighted_norm(f, p), pv) + pow_abs(weighted_norm(g, p), pv);
  return make_certificate(lhs, rhs);
}

json gen_triangle(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.triangle", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                                    Exponent::finite(2.0)));
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
    inst["g"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
    inst["g"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_triangle(const json& inst) {
  const auto f = fn_of<T>(inst, "f");
  const auto g = fn_of<T>(inst, "g");
  const Exponent p = exp_of(inst, "p");
  return make_certificate(weighted_norm(add(f, g), p),
                          weighted_norm(f, p) + weighted_norm(g, p));
}

json gen_monotonicity(Rng& rng, const SuiteConfig& cfg, int, const char* name,
                      WeightMode mode) {
  json inst = base_instance(name, cfg);
  auto dom = gen_domain(rng, cfg, 16, mode);
  Exponent a = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                             Exponent::finite(1.0));
  Exponent b = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                             Exponent::finite(2.0));
  inst["p"] = to_json(std::min(a, b));
  inst["q"] = to_json(std::max(a, b));
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

json gen_unit_monotonicity(Rng& rng, const SuiteConfig& cfg, int trial) {
  return gen_monotonicity(rng, cfg, trial, "norms.unit_monotonicity",
                          WeightMode::unit);
}

json gen_probability_monotonicity(Rng& rng, const SuiteConfig& cfg,
                                  int trial) {
  return gen_monotonicity(rng, cfg, trial, "norms.probability_monotonicity",
                          WeightMode::probability);
}

template <ScalarType T>
Certificate eval_monotonicity(const json& inst) {
  const auto f = fn_of<T>(inst, "f");
  const MonotonicityResult res =
      monotonicity_certificate(f, exp_of(inst, "p"), exp_of(inst, "q"));
  if (!res.certificate || !res.sup_bound) {
    throw precondition_error(
        std::string("monotonicity does not apply to this weight, mode ") +
        to_string(res.mode));
  }
  return fold_worst({*res.certificate, *res.sup_bound});
}

json gen_jensen_power(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.jensen_power", cfg);
  inst["field"] = "real";  // mean comparison needs nonnegative real values
  auto dom = gen_domain(rng, cfg, 16, WeightMode::probability);
  inst["r"] = to_json(pick_exponent(rng, cfg.exponent_pool,
                                    finite_at_least_one, Exponent::finite(2.0)));
  std::vector<double> raw =
      detail::random_vector<double>(rng, dom->size(), 0.1);
  for (double& v : raw) v = std::abs(v);
  inst["phi"] = to_json(ScalarFunction<double>(dom, std::move(raw)));
  return inst;
}

Certificate eval_jensen_power(const json& inst) {
  return jensen_power_certificate(fn_of<double>(inst, "phi"),
                                  exp_of(inst, "r"));
}

json gen_vector_scalar_reduction(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.vector_scalar_reduction", cfg);
  auto dom = gen_domain(rng, cfg, 12);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                    Exponent::finite(2.0)));
  inst["s"] = to_json(pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                    Exponent::finite(2.0)));
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_vector_scalar_reduction(const json& inst) {
  const auto f = fn_of<T>(inst, "f");
  const Exponent p = exp_of(inst, "p");
  const VectorFunction<T> lifted(
      f.domain_ptr(), NormedSpace<T>::lp(exp_of(inst, "s"), 1),
      std::vector<T>(f.values()));
  const double lhs = vector_norm(lifted, p);
  const double rhs = weighted_norm(f, p);
  return deviation_certificate(std::abs(lhs - rhs), rhs, tol_of(inst),
                               json{{"lhs", lhs}, {"rhs", rhs}});
}

template <ScalarType T>
VectorFunction<T> gen_vector_function(Rng& rng,
                                      std::shared_ptr<const WeightedSet> dom,
                                      NormedSpace<T> codomain) {
  std::vector<T> flat =
      detail::random_vector<T>(rng, dom->size() * codomain.dim(), 0.1);
  return VectorFunction<T>(std::move(dom), std::move(codomain),
                           std::move(flat));
}

template <ScalarType T>
json gen_vector_pair(Rng& rng, const SuiteConfig& cfg, json inst,
                     bool value_norm_at_least_one) {
  auto dom = gen_domain(rng, cfg, 10);
  const Exponent s =
      value_norm_at_least_one
          ? pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                          Exponent::finite(2.0))
          : pick_exponent(rng, cfg.exponent_pool, any_exponent,
                          Exponent::finite(2.0));
  const auto dv = static_cast<std::size_t>(rng.uniform_int(1, 5));
  NormedSpace<T> codomain =
      rng.coin() ? NormedSpace<T>::lp(s, dv)
                 : NormedSpace<T>::weighted_lp(
                       s, gen_weights(rng, WeightMode::random, dv));
  inst["F"] = to_json(gen_vector_function<T>(rng, dom, codomain));
  inst["G"] = to_json(gen_vector_function<T>(rng, dom, std::move(codomain)));
  return inst;
}

json gen_vector_triangle(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.vector_triangle", cfg);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                                    Exponent::finite(2.0)));
  return cfg.field == Field::complex
             ? gen_vector_pair<Complex>(rng, cfg, std::move(inst), true)
             : gen_vector_pair<double>(rng, cfg, std::move(inst), true);
}

template <ScalarType T>
Certificate eval_vector_triangle(const json& inst) {
  const auto F = vector_function_from_json<T>(
      require_field(inst, "F", "instance"), "instance.F");
  const auto G = vector_function_from_json<T>(
      require_field(inst, "G", "instance"), "instance.G");
  const Exponent p = exp_of(inst, "p");
  return make_certificate(vector_norm(add(F, G), p),
                          vector_norm(F, p) + vector_norm(G, p));
}

json gen_vector_homogeneity(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("norms.vector_homogeneity", cfg);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                    Exponent::finite(2.0)));
  if (cfg.field == Field::complex) {
    inst["alpha"] = scalar_to_json(gen_scalar<Complex>(rng));
    return gen_vector_pair<Complex>(rng, cfg, std::move(inst), false);
  }
  inst["alpha"] = scalar_to_json(gen_scalar<double>(rng));
  return gen_vector_pair<double>(rng, cfg, std::move(inst), false);
}

template <ScalarType T>
Certificate eval_vector_homogeneity(const json& inst) {
  const auto F = vector_function_from_json<T>(
      require_field(inst, "F", "instance"), "instance.F");
  const T alpha = scalar_of<T>(inst, "alpha");
  const Exponent p = exp_of(inst, "p");
  const double lhs = vector_norm(scale(alpha, F), p);
  const double rhs = abs_value(alpha) * vector_norm(F, p);
  return deviation_certificate(std::abs(lhs - rhs), rhs, tol_of(inst),
                               json{{"lhs", lhs}, {"rhs", rhs}});
}

// ---------------------------------------------------------------------------
// inequalities properties.

json gen_pair_with_conjugates(Rng& rng, const SuiteConfig& cfg,
                              const char* name, bool finite_only) {
  json inst = base_instance(name, cfg);
  auto dom = gen_domain(rng, cfg, 16);
  const Exponent p =
      finite_only ? pick_exponent(rng, cfg.exponent_pool, finite_above_one,
                                  Exponent::finite(2.0))
                  : pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                                  Exponent::finite(2.0));
  inst["p"] = to_json(p);
  inst["q"] = to_json(conjugate(p));
  if (cfg.field == Field::complex) {
    inst["f1"] = to_json(gen_function<Complex>(rng, dom));
    inst["f2"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f1"] = to_json(gen_function<double>(rng, dom));
    inst["f2"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

json gen_holder(Rng& rng, const SuiteConfig& cfg, int) {
  return gen_pair_with_conjugates(rng, cfg, "ineq.holder", false);
}

template <ScalarType T>
Certificate eval_holder(const json& inst) {
  return holder_certificate(HolderInstance<T>{fn_of<T>(inst, "f1"),
                                              fn_of<T>(inst, "f2"),
                                              exp_of(inst, "p"),
                                              exp_of(inst, "q")});
}

json gen_young(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ineq.young", cfg);
  inst["field"] = "real";  // a scalar inequality about nonnegative reals
  const Exponent p = pick_exponent(rng, cfg.exponent_pool, finite_above_one,
                                   Exponent::finite(2.0));
  const Exponent q = conjugate(p);
  inst["p"] = to_json(p);
  inst["q"] = to_json(q);
  const double a = std::abs(rng.gaussian()) * std::pow(10.0, rng.uniform(-1.0, 2.0));
  inst["a"] = a;
  inst["b"] = rng.coin(0.15)
                  ? pow_abs(a, p.value() / q.value())
                  : std::abs(rng.gaussian()) *
                        std::pow(10.0, rng.uniform(-1.0, 2.0));
  return inst;
}

Certificate eval_young(const json& inst) {
  return young_certificate(num_of(inst, "a"), num_of(inst, "b"),
                           exp_of(inst, "p"), exp_of(inst, "q"));
}

json gen_young_equality(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ineq.young_equality", cfg);
  inst["field"] = "real";  // b = a^(p/q) forces equality over the reals
  const Exponent p = pick_exponent(rng, cfg.exponent_pool, finite_above_one,
                                   Exponent::finite(1.5));
  const Exponent q = conjugate(p);
  inst["p"] = to_json(p);
  inst["q"] = to_json(q);
  const double a = std::abs(rng.gaussian()) * std::pow(10.0, rng.uniform(-1.0, 1.0));
  inst["a"] = a;
  inst["b"] = pow_abs(a, p.value() / q.value());
  return inst;
}

Certificate eval_young_equality(const json& inst) {
  const Certificate c = eval_young(inst);
  return make_certificate(std::abs(c.slack()), certificate_tolerance(c.rhs),
                          to_json(c));
}

json gen_holder_normalized(Rng& rng, const SuiteConfig& cfg, int) {
  return gen_pair_with_conjugates(rng, cfg, "ineq.holder_normalized", true);
}

template <ScalarType T>
Certificate eval_holder_normalized(const json& inst) {
  const Exponent p = exp_of(inst, "p");
  const Exponent q = exp_of(inst, "q");
  auto f1 = fn_of<T>(inst, "f1");
  auto f2 = fn_of<T>(inst, "f2");
  const double n1 = weighted_norm(f1, p);
  const double n2 = weighted_norm(f2, q);
  if (n1 == 0.0 || n2 == 0.0) {
    return make_certificate(0.0, 1.0, json{{"degenerate", true}});
  }
  const Certificate c = holder_normalized_form(scale(T{1.0 / n1}, f1),
                                               scale(T{1.0 / n2}, f2), p, q);
  const double mid = c.witness.at("young_middle").get<double>();
  return fold_worst(
      {c, make_certificate(c.lhs, mid, json{{"young_middle", mid}}),
       make_certificate(mid, 1.0, json{{"young_middle", mid}})});
}

json gen_product_holder(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ineq.product_holder", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  const Exponent p = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  const Exponent q = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  inst["p"] = to_json(p);
  inst["q"] = to_json(q);
  inst["r"] = to_json(
      Exponent::from_reciprocal(p.reciprocal() + q.reciprocal()));
  if (cfg.field == Field::complex) {
    inst["f1"] = to_json(gen_function<Complex>(rng, dom));
    inst["f2"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f1"] = to_json(gen_function<double>(rng, dom));
    inst["f2"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_product_holder(const json& inst) {
  return product_holder_certificate(fn_of<T>(inst, "f1"), fn_of<T>(inst, "f2"),
                                    exp_of(inst, "p"), exp_of(inst, "q"),
                                    exp_of(inst, "r"));
}

json gen_interpolation(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ineq.interpolation", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  Exponent a = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                             Exponent::finite(1.0));
  Exponent b = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                             Exponent::finite(4.0));
  inst["p"] = to_json(std::min(a, b));
  inst["q"] = to_json(std::max(a, b));
  inst["theta"] = rng.coin(0.1) ? (rng.coin() ? 1.0 : 0.0) : rng.uniform();
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_interpolation(const json& inst) {
  return interpolation_certificate(fn_of<T>(inst, "f"), exp_of(inst, "p"),
                                   exp_of(inst, "q"), num_of(inst, "theta"));
}

json gen_interpolation_paper_literal(Rng& rng, const SuiteConfig& cfg,
                                     int trial) {
  json inst = base_instance("ineq.interpolation_paper_literal", cfg);
  if (trial == 0) {
    // The singleton refutation: E of size 1, w = 1, f = 1/2, p = q = 2.
    inst["field"] = "real";
    inst["p"] = 2.0;
    inst["q"] = 2.0;
    inst["f"] = json{{"weights", {1.0}}, {"values", {0.5}}};
    return inst;
  }
  auto dom = gen_domain(rng, cfg, 16);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, finite_exp,
                                    Exponent::finite(2.0)));
  inst["q"] = to_json(pick_exponent(rng, cfg.exponent_pool, finite_exp,
                                    Exponent::finite(2.0)));
  if (cfg.field == Field::complex) {
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_interpolation_paper_literal(const json& inst) {
  return interpolation_paper_literal_certificate(
      fn_of<T>(inst, "f"), exp_of(inst, "p"), exp_of(inst, "q"));
}

json gen_minkowski(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ineq.minkowski", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  inst["p"] = to_json(pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                                    Exponent::finite(3.0)));
  if (cfg.field == Field::complex) {
    inst["f1"] = to_json(gen_function<Complex>(rng, dom));
    inst["f2"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["f1"] = to_json(gen_function<double>(rng, dom));
    inst["f2"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_minkowski(const json& inst) {
  const MinkowskiResult<T> res = minkowski_certificate(
      fn_of<T>(inst, "f1"), fn_of<T>(inst, "f2"), exp_of(inst, "p"));
  std::vector<Certificate> certs{res.certificate};
  if (res.split) {
    certs.push_back(make_certificate(res.split->power_sum,
                                     res.split->s1 + res.split->s2,
                                     json{{"stage", "pointwise split"}}));
    certs.push_back(make_certificate(res.split->s1, res.split->bound1,
                                     json{{"stage", "cross term 1"}}));
    certs.push_back(make_certificate(res.split->s2, res.split->bound2,
                                     json{{"stage", "cross term 2"}}));
  }
  return fold_worst(std::move(certs));
}

json gen_holder_witness_equality(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ineq.holder_witness_equality", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  const Exponent p = pick_exponent(rng, cfg.exponent_pool, finite_above_one,
                                   Exponent::finite(2.0));
  inst["p"] = to_json(p);
  inst["q"] = to_json(conjugate(p));
  if (cfg.field == Field::complex) {
    inst["h"] = to_json(gen_function<Complex>(rng, dom, 0.0));
  } else {
    inst["h"] = to_json(gen_function<double>(rng, dom, 0.0));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_holder_witness_equality(const json& inst) {
  const auto h = fn_of<T>(inst, "h");
  const Exponent p = exp_of(inst, "p");
  const Exponent q = exp_of(inst, "q");
  if (h.is_zero()) {
    return make_certificate(0.0, 1.0, json{{"degenerate", true}});
  }
  // |f|^p = |h|^q pointwise, so f is the p-side factor of the equality.
  const ScalarFunction<T> f = holder_equality_witness(h, p, q);
  const Certificate c = holder_certificate(HolderInstance<T>{f, h, p, q});
  return make_certificate(std::abs(c.slack()), certificate_tolerance(c.rhs),
                          to_json(c));
}

json gen_scale_invariance(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = gen_pair_with_conjugates(rng, cfg, "ineq.scale_invariance", false);
  if (cfg.field == Field::complex) {
    inst["alpha"] = scalar_to_json(gen_scalar<Complex>(rng) + Complex{0.5});
    inst["beta"] = scalar_to_json(gen_scalar<Complex>(rng) + Complex{0.5});
  } else {
    inst["alpha"] = gen_scalar<double>(rng) + 0.5;
    inst["beta"] = gen_scalar<double>(rng) + 0.5;
  }
  return inst;
}

// Relative Hoelder slack is invariant under f1 -> alpha f1, f2 -> beta f2.
template <ScalarType T>
Certificate eval_scale_invariance(const json& inst) {
  const auto f1 = fn_of<T>(inst, "f1");
  const auto f2 = fn_of<T>(inst, "f2");
  const Exponent p = exp_of(inst, "p");
  const Exponent q = exp_of(inst, "q");
  const T alpha = scalar_of<T>(inst, "alpha");
  const T beta = scalar_of<T>(inst, "beta");
  const Certificate c1 = holder_certificate(HolderInstance<T>{f1, f2, p, q});
  const Certificate c2 = holder_certificate(
      HolderInstance<T>{scale(alpha, f1), scale(beta, f2), p, q});
  const double factor = abs_value(alpha) * abs_value(beta);
  const double dev = std::abs(c2.slack() - factor * c1.slack());
  return deviation_certificate(
      dev, factor * (std::abs(c1.slack()) + c1.rhs), tol_of(inst),
      json{{"slack", c1.slack()}, {"scaled_slack", c2.slack()}});
}

// ---------------------------------------------------------------------------
// operators properties.

json gen_apply_linearity(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.apply_linearity", cfg);
  auto dom = gen_domain(rng, cfg, 8);
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom));
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
    inst["g"] = to_json(gen_function<Complex>(rng, dom));
    inst["alpha"] = scalar_to_json(gen_scalar<Complex>(rng));
    inst["beta"] = scalar_to_json(gen_scalar<Complex>(rng));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom));
    inst["f"] = to_json(gen_function<double>(rng, dom));
    inst["g"] = to_json(gen_function<double>(rng, dom));
    inst["alpha"] = scalar_to_json(gen_scalar<double>(rng));
    inst["beta"] = scalar_to_json(gen_scalar<double>(rng));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_apply_linearity(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const auto f = fn_of<T>(inst, "f");
  const auto g = fn_of<T>(inst, "g");
  const T alpha = scalar_of<T>(inst, "alpha");
  const T beta = scalar_of<T>(inst, "beta");
  const auto lhs = apply(a, add(scale(alpha, f), scale(beta, g)));
  const auto rhs = add(scale(alpha, apply(a, f)), scale(beta, apply(a, g)));
  double dev = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    dev = std::max(dev, abs_value(lhs.value(i) - rhs.value(i)));
    mag = std::max(mag, abs_value(rhs.value(i)));
  }
  return deviation_certificate(dev, mag, tol_of(inst));
}

json gen_kernel_roundtrip(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.kernel_roundtrip", cfg);
  auto dom = gen_domain(rng, cfg, 6);
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_kernel_roundtrip(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const std::function<ScalarFunction<T>(const ScalarFunction<T>&)> action =
      [&a](const ScalarFunction<T>& f) { return apply(a, f); };
  const KernelOperator<T> probed = kernel_of<T>(action, a.domain_ptr());
  double dev = 0.0;
  for (std::size_t i = 0; i < a.kernel().size(); ++i) {
    dev = std::max(dev, abs_value(probed.kernel()[i] - a.kernel()[i]) /
                            (1.0 + abs_value(a.kernel()[i])));
  }
  const KernelOperator<T> verbatim = kernel_of(a);
  const bool bitwise = verbatim.kernel() == a.kernel();
  return deviation_certificate(bitwise ? dev : kBrokenContract, 1.0,
                               tol_of(inst),
                               json{{"bitwise_roundtrip", bitwise}});
}

json gen_compose_consistency(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.compose_consistency", cfg);
  auto dom = gen_domain(rng, cfg, 8);
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom));
    inst["h1"] = to_json(gen_function<Complex>(rng, dom));
    inst["h2"] = to_json(gen_function<Complex>(rng, dom));
    inst["f"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom));
    inst["h1"] = to_json(gen_function<double>(rng, dom));
    inst["h2"] = to_json(gen_function<double>(rng, dom));
    inst["f"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_compose_consistency(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const auto h1 = fn_of<T>(inst, "h1");
  const auto h2 = fn_of<T>(inst, "h2");
  const auto f = fn_of<T>(inst, "f");
  const KernelOperator<T> b = compose(h2, a, h1);
  const std::size_t n = a.size();
  bool bitwise = true;
  for (std::size_t x = 0; x < n && bitwise; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (b.entry(x, y) != h2.value(x) * a.entry(x, y) * h1.value(y)) {
        bitwise = false;
        break;
      }
    }
  }
  const auto composed = apply(b, f);
  const auto direct = pointwise_multiply(h2, apply(a, pointwise_multiply(h1, f)));
  double dev = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < composed.size(); ++i) {
    dev = std::max(dev, abs_value(composed.value(i) - direct.value(i)));
    mag = std::max(mag, abs_value(direct.value(i)));
  }
  return deviation_certificate(bitwise ? dev : kBrokenContract, mag,
                               tol_of(inst), json{{"entries_exact", bitwise}});
}

json gen_mult_norm(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.mult_norm", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  const Exponent p = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  const Exponent q = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  inst["p"] = to_json(p);
  inst["q"] = to_json(q);
  inst["r"] = to_json(
      Exponent::from_reciprocal(p.reciprocal() + q.reciprocal()));
  const bool vector_valued = rng.coin(0.3);
  if (cfg.field == Field::complex) {
    inst["h"] = to_json(gen_function<Complex>(rng, dom));
    if (vector_valued) {
      const Exponent s = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                       Exponent::finite(2.0));
      const auto dv = static_cast<std::size_t>(rng.uniform_int(1, 4));
      inst["F"] = to_json(
          gen_vector_function<Complex>(rng, dom, NormedSpace<Complex>::lp(s, dv)));
    } else {
      inst["f"] = to_json(gen_function<Complex>(rng, dom));
    }
  } else {
    inst["h"] = to_json(gen_function<double>(rng, dom));
    if (vector_valued) {
      const Exponent s = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                       Exponent::finite(2.0));
      const auto dv = static_cast<std::size_t>(rng.uniform_int(1, 4));
      inst["F"] = to_json(
          gen_vector_function<double>(rng, dom, NormedSpace<double>::lp(s, dv)));
    } else {
      inst["f"] = to_json(gen_function<double>(rng, dom));
    }
  }
  return inst;
}

template <ScalarType T>
Certificate eval_mult_norm(const json& inst) {
  const auto h = fn_of<T>(inst, "h");
  const Exponent p = exp_of(inst, "p");
  const Exponent q = exp_of(inst, "q");
  const Exponent r = exp_of(inst, "r");
  if (inst.contains("F")) {
    return mult_norm_certificate(
        h,
        vector_function_from_json<T>(require_field(inst, "F", "instance"),
                                     "instance.F"),
        p, q, r);
  }
  return mult_norm_certificate(h, fn_of<T>(inst, "f"), p, q, r);
}

json gen_mult_sharpness(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.mult_sharpness", cfg);
  auto dom = gen_domain(rng, cfg, 16);
  const Exponent p = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  const Exponent q = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  inst["p"] = to_json(p);
  inst["q"] = to_json(q);
  inst["r"] = to_json(
      Exponent::from_reciprocal(p.reciprocal() + q.reciprocal()));
  if (cfg.field == Field::complex) {
    inst["h"] = to_json(gen_function<Complex>(rng, dom, 0.0));
  } else {
    inst["h"] = to_json(gen_function<double>(rng, dom, 0.0));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_mult_sharpness(const json& inst) {
  const auto h = fn_of<T>(inst, "h");
  const Exponent p = exp_of(inst, "p");
  const Exponent q = exp_of(inst, "q");
  const Exponent r = exp_of(inst, "r");
  if (h.is_zero()) {
    return make_certificate(0.0, 1.0, json{{"degenerate", true}});
  }
  const ScalarFunction<T> f = mult_sharpness_witness(h, p, q, r);
  const Certificate c = mult_norm_certificate(h, f, p, q, r);
  return make_certificate(std::abs(c.slack()), certificate_tolerance(c.rhs),
                          to_json(c));
}

// Exponent pairs whose operator norm has a closed form; the third case is
// real-only and size-limited.
enum class ExactCase { rows, columns, sign_enumeration };

ExactCase pick_exact_case(Rng& rng, const SuiteConfig& cfg, std::size_t n) {
  if (cfg.field == Field::real && n <= 10 && rng.coin(1.0 / 3.0)) {
    return ExactCase::sign_enumeration;
  }
  return rng.coin() ? ExactCase::rows : ExactCase::columns;
}

void put_exact_exponents(json& inst, Rng& rng, const SuiteConfig& cfg,
                         ExactCase c) {
  switch (c) {
    case ExactCase::rows:
      inst["r"] = to_json(pick_exponent(rng, cfg.exponent_pool,
                                        at_least_one_exp, Exponent::finite(2.0)));
      inst["s"] = to_json(Exponent::infinity());
      break;
    case ExactCase::columns:
      inst["r"] = to_json(Exponent::finite(1.0));
      inst["s"] = to_json(pick_exponent(rng, cfg.exponent_pool,
                                        at_least_one_exp, Exponent::finite(2.0)));
      break;
    case ExactCase::sign_enumeration:
      inst["r"] = to_json(Exponent::infinity());
      inst["s"] = to_json(Exponent::finite(1.0));
      break;
  }
}

json gen_opnorm_attained(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.opnorm_attained", cfg);
  auto dom = gen_domain(rng, cfg, 5);
  if (rng.coin()) {
    put_exact_exponents(inst, rng, cfg, pick_exact_case(rng, cfg, dom->size()));
  } else {
    inst["r"] = to_json(pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                      Exponent::finite(2.0)));
    inst["s"] = to_json(pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                      Exponent::finite(2.0)));
  }
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom, 0.0));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom, 0.0));
  }
  inst["budget"] = budget_to_json(AscentBudget{6, 120, rng.next_u64()});
  inst["probe_seed"] = rng.next_u64();
  return inst;
}

template <ScalarType T>
Certificate eval_opnorm_attained(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const Exponent r = exp_of(inst, "r");
  const Exponent s = exp_of(inst, "s");
  const auto est = operator_norm(a, r, s, budget_of(inst));
  const double tol = tol_of(inst);
  std::vector<Certificate> certs;
  const double ratio = detail::attained_ratio(a, est.maximizer, r, s);
  certs.push_back(deviation_certificate(
      std::abs(ratio - est.value), est.value, tol,
      json{{"stage", "maximizer attains the value"},
           {"kind", to_string(est.kind)}}));
  if (est.kind == EstimateKind::exact) {
    Rng probe = Rng::stream(seed_of(inst, "probe_seed"), 0x0B5E55u, 0);
    for (int i = 0; i < 20; ++i) {
      ScalarFunction<T> f(
          a.domain_ptr(),
          detail::random_vector<T>(probe, a.size(), i % 4 == 0 ? 0.4 : 0.0));
      const double num = weighted_norm(apply(a, f), s);
      const double den = weighted_norm(f, r);
      if (den == 0.0) continue;
      certs.push_back(make_certificate(
          num, est.value * den * (1.0 + tol) + kAbsFloor,
          json{{"stage", "exact value dominates sampled ratios"}}));
    }
  }
  return fold_worst(std::move(certs));
}

json gen_transfer_forward(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.transfer_forward", cfg);
  auto dom = gen_domain(rng, cfg, 6);
  put_exact_exponents(inst, rng, cfg, pick_exact_case(rng, cfg, dom->size()));
  const Exponent r = exp_of(inst, "r");
  inst["q1"] = to_json(pick_exponent(
      rng, cfg.exponent_pool, [&](const Exponent& e) { return e >= r; },
      Exponent::infinity()));
  inst["q2"] = to_json(pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                                     Exponent::finite(2.0)));
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom, 0.0));
    inst["h1"] = to_json(gen_function<Complex>(rng, dom));
    inst["h2"] = to_json(gen_function<Complex>(rng, dom));
    inst["phi"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom, 0.0));
    inst["h1"] = to_json(gen_function<double>(rng, dom));
    inst["h2"] = to_json(gen_function<double>(rng, dom));
    inst["phi"] = to_json(gen_function<double>(rng, dom));
  }
  inst["budget"] = budget_to_json(AscentBudget{6, 120, rng.next_u64()});
  return inst;
}

template <ScalarType T>
Certificate eval_transfer_forward(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  return transfer_forward_certificate(
      a, fn_of<T>(inst, "h1"), fn_of<T>(inst, "h2"), fn_of<T>(inst, "phi"),
      exp_of(inst, "r"), exp_of(inst, "s"), exp_of(inst, "q1"),
      exp_of(inst, "q2"), std::nullopt, budget_of(inst));
}

json gen_transfer_converse(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.transfer_converse", cfg);
  auto dom = gen_domain(rng, cfg, 8);
  put_exact_exponents(inst, rng, cfg, pick_exact_case(rng, cfg, dom->size()));
  const Exponent r = exp_of(inst, "r");
  inst["q1"] = to_json(pick_exponent(
      rng, cfg.exponent_pool, [&](const Exponent& e) { return e >= r; },
      Exponent::infinity()));
  inst["q2"] = to_json(pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                                     Exponent::finite(2.0)));
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom, 0.0));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom, 0.0));
  }
  inst["shave"] = 0.9;
  inst["check_seed"] = rng.next_u64();
  return inst;
}

// With k shaved below the exact norm, the converse check must produce a
// violating candidate. The meta-certificate holds exactly when it does.
template <ScalarType T>
Certificate eval_transfer_converse(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const Exponent r = exp_of(inst, "r");
  const Exponent s = exp_of(inst, "s");
  const auto est = operator_norm(a, r, s);
  if (est.kind != EstimateKind::exact || est.value == 0.0) {
    throw precondition_error("converse scenario needs a nonzero exact norm");
  }
  const double k = num_of(inst, "shave") * est.value;
  const Certificate inner = transfer_converse_check(
      a, r, s, exp_of(inst, "q1"), exp_of(inst, "q2"), k, 48,
      seed_of(inst, "check_seed"));
  return make_certificate(inner.rhs, inner.lhs,
                          json{{"detected",
                                inner.status == CertStatus::violated},
                               {"inner", to_json(inner)}});
}

json gen_vector_transfer_reduction(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.vector_transfer_reduction", cfg);
  auto dom = gen_domain(rng, cfg, 6);
  put_exact_exponents(inst, rng, cfg, pick_exact_case(rng, cfg, dom->size()));
  const Exponent r = exp_of(inst, "r");
  inst["q1"] = to_json(pick_exponent(
      rng, cfg.exponent_pool, [&](const Exponent& e) { return e >= r; },
      Exponent::infinity()));
  inst["q2"] = to_json(pick_exponent(rng, cfg.exponent_pool, at_least_one_exp,
                                     Exponent::finite(2.0)));
  inst["s_value"] = to_json(pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                          Exponent::finite(2.0)));
  inst["k"] = 1.0;
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom, 0.0));
    inst["h1"] = to_json(gen_function<Complex>(rng, dom));
    inst["h2"] = to_json(gen_function<Complex>(rng, dom));
    inst["phi"] = to_json(gen_function<Complex>(rng, dom));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom, 0.0));
    inst["h1"] = to_json(gen_function<double>(rng, dom));
    inst["h2"] = to_json(gen_function<double>(rng, dom));
    inst["phi"] = to_json(gen_function<double>(rng, dom));
  }
  return inst;
}

template <ScalarType T>
Certificate eval_vector_transfer_reduction(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const auto h1 = fn_of<T>(inst, "h1");
  const auto h2 = fn_of<T>(inst, "h2");
  const auto phi = fn_of<T>(inst, "phi");
  const Exponent r = exp_of(inst, "r");
  const Exponent s = exp_of(inst, "s");
  const Exponent q1 = exp_of(inst, "q1");
  const Exponent q2 = exp_of(inst, "q2");
  const double k = num_of(inst, "k");
  const Certificate scalar_cert =
      transfer_forward_certificate(a, h1, h2, phi, r, s, q1, q2, k);
  const VectorFunction<T> lifted_phi(
      phi.domain_ptr(), NormedSpace<T>::lp(exp_of(inst, "s_value"), 1),
      std::vector<T>(phi.values()));
  const Certificate vector_cert = vector_transfer_certificate(
      a, h1, h2, lifted_phi, r, s, q1, q2, k);
  const double dev = std::max(std::abs(scalar_cert.lhs - vector_cert.lhs),
                              std::abs(scalar_cert.rhs - vector_cert.rhs));
  return deviation_certificate(
      dev, std::max(scalar_cert.lhs, scalar_cert.rhs), tol_of(inst),
      json{{"scalar", to_json(scalar_cert)}, {"vector", to_json(vector_cert)}});
}

json gen_lift_commutation(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.lift_commutation", cfg);
  auto dom = gen_domain(rng, cfg, 8);
  const auto dv = static_cast<std::size_t>(rng.uniform_int(1, 8));
  const Exponent s = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  inst["codomain_p"] = to_json(s);
  inst["value_dim"] = dv;
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom));
    json m = json::array();
    for (const Complex& v : detail::random_vector<Complex>(rng, dv * dv, 0.1)) {
      m.push_back(scalar_to_json(v));
    }
    inst["transform"] = std::move(m);
    inst["F"] = to_json(
        gen_vector_function<Complex>(rng, dom, NormedSpace<Complex>::lp(s, dv)));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom));
    json m = json::array();
    for (double v : detail::random_vector<double>(rng, dv * dv, 0.1)) {
      m.push_back(scalar_to_json(v));
    }
    inst["transform"] = std::move(m);
    inst["F"] = to_json(
        gen_vector_function<double>(rng, dom, NormedSpace<double>::lp(s, dv)));
  }
  return inst;
}

// Index-side and value-side lifts act on different axes, so they commute.
template <ScalarType T>
Certificate eval_lift_commutation(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const auto F = vector_function_from_json<T>(
      require_field(inst, "F", "instance"), "instance.F");
  const json& jm = require_field(inst, "transform", "instance");
  const auto dv = F.dim();
  if (!jm.is_array() || jm.size() != dv * dv) {
    throw schema_error("instance.transform: expected " +
                       std::to_string(dv * dv) + " entries");
  }
  std::vector<T> m;
  m.reserve(jm.size());
  for (std::size_t i = 0; i < jm.size(); ++i) {
    m.push_back(scalar_from_json<T>(
        jm[i], "instance.transform[" + std::to_string(i) + "]"));
  }
  const auto index_lift = lift_index_transform<T>(
      [&a](const ScalarFunction<T>& f) { return apply(a, f); });
  const auto value_lift = lift_value_transform(ValueTransform<T>(dv, m));
  const VectorFunction<T> via_index_first = value_lift(index_lift(F));
  const VectorFunction<T> via_value_first = index_lift(value_lift(F));
  double dev = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < via_index_first.flat_values().size(); ++i) {
    dev = std::max(dev, abs_value(via_index_first.flat_values()[i] -
                                  via_value_first.flat_values()[i]));
    mag = std::max(mag, abs_value(via_index_first.flat_values()[i]));
  }
  return deviation_certificate(dev, mag, tol_of(inst));
}

json gen_infone_implication(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.infone_implication", cfg);
  auto dom = gen_domain(rng, cfg, 6);
  const bool force_condition = rng.coin(0.7);
  const double target = rng.uniform(0.2, 0.98);
  auto finish = [&](auto kernel) {
    if (force_condition) {
      const std::size_t n = kernel.size();
      const double* w = kernel.domain().weights().data();
      double double_sum = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          double_sum += abs_value(kernel.entry(x, y)) * w[x] * w[y];
        }
      }
      if (double_sum > 0.0) {
        using S = std::remove_cvref_t<decltype(kernel.kernel()[0])>;
        std::vector<S> scaled(kernel.kernel());
        for (S& v : scaled) v *= S{target / double_sum};
        kernel = KernelOperator<S>(kernel.domain_ptr(), std::move(scaled));
      }
    }
    inst["operator"] = kernel_to_json(kernel);
  };
  if (cfg.field == Field::complex) {
    finish(gen_kernel<Complex>(rng, dom));
  } else {
    finish(gen_kernel<double>(rng, dom));
  }
  inst["samples"] = 60;
  inst["check_seed"] = rng.next_u64();
  return inst;
}

template <ScalarType T>
Certificate eval_infone_implication(const json& inst) {
  const auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                                   "instance.operator");
  const InfOneResult res = infone_condition_check(
      a, static_cast<int>(num_of(inst, "samples")),
      seed_of(inst, "check_seed"));
  if (res.condition.status == CertStatus::violated) {
    return make_certificate(0.0, 1.0, json{{"vacuous", true}});
  }
  return make_certificate(res.bound.lhs, 1.0,
                          json{{"condition", to_json(res.condition)},
                               {"bound_exact", res.bound_exact}});
}

json gen_infone_construct(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("ops.infone_construct", cfg);
  auto dom = gen_domain(rng, cfg, 6);
  const ExactCase c = pick_exact_case(rng, cfg, dom->size());
  put_exact_exponents(inst, rng, cfg, c);
  inst["target"] = rng.uniform(0.3, 0.95);
  inst["h_scale_1"] = rng.uniform(0.4, 0.99);
  inst["h_scale_2"] = rng.uniform(0.4, 0.99);
  if (cfg.field == Field::complex) {
    inst["operator"] = kernel_to_json(gen_kernel<Complex>(rng, dom, 0.0));
    inst["h1"] = to_json(gen_function<Complex>(rng, dom, 0.0));
    inst["h2"] = to_json(gen_function<Complex>(rng, dom, 0.0));
  } else {
    inst["operator"] = kernel_to_json(gen_kernel<double>(rng, dom, 0.0));
    inst["h1"] = to_json(gen_function<double>(rng, dom, 0.0));
    inst["h2"] = to_json(gen_function<double>(rng, dom, 0.0));
  }
  inst["samples"] = 80;
  inst["check_seed"] = rng.next_u64();
  return inst;
}

template <ScalarType T>
Certificate eval_infone_construct(const json& inst) {
  auto a = kernel_of_json<T>(require_field(inst, "operator", "instance"),
                             "instance.operator");
  const Exponent r = exp_of(inst, "r");
  const Exponent s = exp_of(inst, "s");
  const auto est = operator_norm(a, r, s);
  if (est.kind != EstimateKind::exact || est.value == 0.0) {
    throw precondition_error("construction scenario needs a nonzero exact norm");
  }
  const double target = num_of(inst, "target");
  std::vector<T> scaled(a.kernel());
  for (T& v : scaled) v *= T{target / est.value};
  a = KernelOperator<T>(a.domain_ptr(), std::move(scaled));

  auto unitize = [&](ScalarFunction<T> h, const Exponent& e, double to) {
    const double n = weighted_norm(h, e);
    return n == 0.0 ? h : scale(T{to / n}, h);
  };
  const ScalarFunction<T> h1 =
      unitize(fn_of<T>(inst, "h1"), r, num_of(inst, "h_scale_1"));
  const ScalarFunction<T> h2 =
      unitize(fn_of<T>(inst, "h2"), conjugate(s), num_of(inst, "h_scale_2"));
  const KernelOperator<T> b = infone_construct(a, h1, h2, r, s);
  const InfOneResult res = infone_condition_check(
      b, static_cast<int>(num_of(inst, "samples")),
      seed_of(inst, "check_seed"));
  return make_certificate(res.bound.lhs, 1.0,
                          json{{"bound_exact", res.bound_exact}});
}

// ---------------------------------------------------------------------------
// tracenorm properties.

json space_to_instance(Rng& rng, const SuiteConfig& cfg, std::size_t dim) {
  if (rng.coin(0.4)) {
    return json{{"dim", dim}, {"norm", json{{"kind", "lp"}, {"p", 2.0}}}};
  }
  const Exponent p = pick_exponent(rng, cfg.exponent_pool, any_exponent,
                                   Exponent::finite(2.0));
  return json{{"dim", dim},
              {"norm", json{{"kind", "weighted_lp"},
                            {"p", to_json(p)},
                            {"weights", gen_weights(rng, WeightMode::random, dim)}}}};
}

template <ScalarType T>
LinearMap<T> map_of(const json& inst) {
  NormedSpace<T> space = normed_space_from_json<T>(
      require_field(inst, "space", "instance"), "instance.space");
  const json& jm = require_field(inst, "matrix", "instance");
  if (!jm.is_array()) throw schema_error("instance.matrix: expected an array");
  std::vector<T> m;
  m.reserve(jm.size());
  for (std::size_t i = 0; i < jm.size(); ++i) {
    m.push_back(scalar_from_json<T>(
        jm[i], "instance.matrix[" + std::to_string(i) + "]"));
  }
  try {
    return LinearMap<T>(std::move(space), std::move(m));
  } catch (const error& e) {
    throw schema_error(std::string("instance: ") + e.what());
  }
}

template <ScalarType T>
json matrix_to_json(Rng& rng, std::size_t dim) {
  json m = json::array();
  for (const T& v : detail::random_vector<T>(rng, dim * dim, 0.1)) {
    m.push_back(scalar_to_json(v));
  }
  return m;
}

QuasinormBudget quasinorm_budget_of(const json& inst) {
  QuasinormBudget b;
  b.restarts = 4;
  if (inst.contains("quasinorm_budget")) {
    const json& j = inst["quasinorm_budget"];
    b.restarts = j.value("restarts", b.restarts);
    b.seed = j.value("seed", b.seed);
  }
  return b;
}

json quasinorm_budget_to_json(const QuasinormBudget& b) {
  return json{{"restarts", b.restarts}, {"seed", b.seed}};
}

Exponent pick_quasinorm_exponent(Rng& rng) {
  static const double values[] = {1.0, 0.75, 0.5, 0.25};
  return Exponent::finite(
      values[static_cast<std::size_t>(rng.uniform_int(0, 3))]);
}

json gen_trace_consistency(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("trace.estimate_consistency", cfg);
  const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 5));
  inst["space"] = space_to_instance(rng, cfg, dim);
  inst["matrix"] = cfg.field == Field::complex
                       ? matrix_to_json<Complex>(rng, dim)
                       : matrix_to_json<double>(rng, dim);
  inst["p"] = to_json(pick_quasinorm_exponent(rng));
  inst["quasinorm_budget"] =
      quasinorm_budget_to_json(QuasinormBudget{4, rng.next_u64()});
  return inst;
}

template <ScalarType T>
Certificate eval_trace_consistency(const json& inst) {
  const LinearMap<T> a = map_of<T>(inst);
  const Exponent p = exp_of(inst, "p");
  const auto est = trace_quasinorm(a, p, quasinorm_budget_of(inst));
  double psum = 0.0;
  for (const auto& term : est.representation.terms) {
    psum += pow_abs(abs_value(term.c), p.value());
  }
  const double recomputed = pow_abs(psum, 1.0 / p.value());
  const LinearMap<T> back = assemble(est.representation);
  double dev = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < a.matrix().size(); ++i) {
    dev = std::max(dev, abs_value(back.matrix()[i] - a.matrix()[i]));
    mag = std::max(mag, abs_value(a.matrix()[i]));
  }
  const double tol = tol_of(inst);
  return fold_worst(
      {deviation_certificate(std::abs(recomputed - est.value), est.value, tol,
                             json{{"stage", "value matches representation"}}),
       deviation_certificate(dev, mag, tol,
                             json{{"stage", "representation assembles back"},
                              {"terms", est.representation.terms.size()}})});
}

json gen_trace_duality(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("trace.duality_euclidean", cfg);
  const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 6));
  inst["space"] = json{{"dim", dim}, {"norm", json{{"kind", "lp"}, {"p", 2.0}}}};
  inst["matrix"] = cfg.field == Field::complex
                       ? matrix_to_json<Complex>(rng, dim)
                       : matrix_to_json<double>(rng, dim);
  inst["pairing"] = cfg.field == Field::complex
                        ? matrix_to_json<Complex>(rng, dim)
                        : matrix_to_json<double>(rng, dim);
  inst["quasinorm_budget"] =
      quasinorm_budget_to_json(QuasinormBudget{4, rng.next_u64()});
  return inst;
}

// |trace(B A)| <= sigma_max(B) N_1(A) on Euclidean spaces.
template <ScalarType T>
Certificate eval_trace_duality(const json& inst) {
  const LinearMap<T> a = map_of<T>(inst);
  const std::size_t dim = a.dim();
  const json& jp = require_field(inst, "pairing", "instance");
  std::vector<T> b_entries;
  b_entries.reserve(jp.size());
  for (std::size_t i = 0; i < jp.size(); ++i) {
    b_entries.push_back(scalar_from_json<T>(
        jp[i], "instance.pairing[" + std::to_string(i) + "]"));
  }
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> bm(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) bm(i, j) = b_entries[i * dim + j];
  }
  const double smax =
      Eigen::JacobiSVD<decltype(bm)>(bm).singularValues()(0);
  if (smax == 0.0) return make_certificate(0.0, 1.0, json{{"degenerate", true}});
  for (T& v : b_entries) v *= T{1.0 / smax};
  const LinearMap<T> b(a.space(), std::move(b_entries));
  const auto est =
      trace_quasinorm(a, Exponent::finite(1.0), quasinorm_budget_of(inst));
  return make_certificate(abs_value(trace_of_product(b, a)), est.value,
                          json{{"kind", to_string(est.kind)}});
}

json gen_trace_homogeneity(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("trace.homogeneity", cfg);
  const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 4));
  inst["space"] = space_to_instance(rng, cfg, dim);
  inst["matrix"] = cfg.field == Field::complex
                       ? matrix_to_json<Complex>(rng, dim)
                       : matrix_to_json<double>(rng, dim);
  inst["p"] = to_json(pick_quasinorm_exponent(rng));
  inst["alpha"] = std::abs(rng.gaussian()) + 0.1;
  inst["quasinorm_budget"] =
      quasinorm_budget_to_json(QuasinormBudget{3, rng.next_u64()});
  return inst;
}

template <ScalarType T>
Certificate eval_trace_homogeneity(const json& inst) {
  const LinearMap<T> a = map_of<T>(inst);
  const Exponent p = exp_of(inst, "p");
  const double alpha = num_of(inst, "alpha");
  const QuasinormBudget budget = quasinorm_budget_of(inst);
  const double base = trace_quasinorm(a, p, budget).value;
  const double scaled = trace_quasinorm(scale(T{alpha}, a), p, budget).value;
  return deviation_certificate(std::abs(scaled - alpha * base), alpha * base,
                               tol_of(inst),
                               json{{"base", base}, {"scaled", scaled}});
}

json gen_trace_roundtrip(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("trace.assemble_roundtrip", cfg);
  const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 6));
  inst["space"] = space_to_instance(rng, cfg, dim);
  inst["matrix"] = cfg.field == Field::complex
                       ? matrix_to_json<Complex>(rng, dim)
                       : matrix_to_json<double>(rng, dim);
  return inst;
}

template <ScalarType T>
Certificate eval_trace_roundtrip(const json& inst) {
  const LinearMap<T> a = map_of<T>(inst);
  const LinearMap<T> back = assemble(canonical_representation(a));
  double dev = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < a.matrix().size(); ++i) {
    dev = std::max(dev, abs_value(back.matrix()[i] - a.matrix()[i]));
    mag = std::max(mag, abs_value(a.matrix()[i]));
  }
  return deviation_certificate(dev, mag, tol_of(inst));
}

json gen_trace_monotone(Rng& rng, const SuiteConfig& cfg, int) {
  json inst = base_instance("trace.monotone_subadditive", cfg);
  const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 4));
  inst["space"] = space_to_instance(rng, cfg, dim);
  inst["matrix"] = cfg.field == Field::complex
                       ? matrix_to_json<Complex>(rng, dim)
                       : matrix_to_json<double>(rng, dim);
  inst["check_seed"] = rng.next_u64();
  return inst;
}

template <ScalarType T>
Certificate eval_trace_monotone(const json& inst) {
  const LinearMap<T> a = map_of<T>(inst);
  const QuasinormPropertiesReport report = quasinorm_properties_check(
      a,
      {Exponent::finite(1.0), Exponent::finite(0.75), Exponent::finite(0.5),
       Exponent::finite(0.25)},
      seed_of(inst, "check_seed"), 1);
  if (!report.monotone) {
    return make_certificate(kBrokenContract, 0.0,
                            json{{"monotone", false},
                                 {"estimates", report.estimates}});
  }
  Certificate worst = report.worst_subadditivity;
  worst.witness = json{{"monotone", true}, {"estimates", report.estimates}};
  return worst;
}

// ---------------------------------------------------------------------------
// Registry and the engine.

struct Property {
  const char* name;
  int cost;
  json (*generate)(Rng&, const SuiteConfig&, int);
  Certificate (*evaluate)(const json&);
};

template <Certificate (*RealEval)(const json&),
          Certificate (*ComplexEval)(const json&)>
Certificate by_field(const json& inst) {
  return instance_is_complex(inst) ? ComplexEval(inst) : RealEval(inst);
}

template <Certificate (*Eval)(const json&)>
Certificate real_only(const json& inst) {
  if (instance_is_complex(inst)) {
    throw schema_error("instance.field: this property is real-valued");
  }
  return Eval(inst);
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"norms.homogeneity", 1, gen_homogeneity,
       by_field<eval_homogeneity<double>, eval_homogeneity<Complex>>},
      {"norms.power_identity", 1, gen_power_identity,
       by_field<eval_power_identity<double>, eval_power_identity<Complex>>},
      {"norms.ppower_subadditivity", 1, gen_ppower_subadditivity,
       by_field<eval_ppower_subadditivity<double>,
                eval_ppower_subadditivity<Complex>>},
      {"norms.triangle", 1, gen_triangle,
       by_field<eval_triangle<double>, eval_triangle<Complex>>},
      {"norms.unit_monotonicity", 1, gen_unit_monotonicity,
       by_field<eval_monotonicity<double>, eval_monotonicity<Complex>>},
      {"norms.probability_monotonicity", 1, gen_probability_monotonicity,
       by_field<eval_monotonicity<double>, eval_monotonicity<Complex>>},
      {"norms.jensen_power", 1, gen_jensen_power, real_only<eval_jensen_power>},
      {"norms.vector_scalar_reduction", 1, gen_vector_scalar_reduction,
       by_field<eval_vector_scalar_reduction<double>,
                eval_vector_scalar_reduction<Complex>>},
      {"norms.vector_triangle", 2, gen_vector_triangle,
       by_field<eval_vector_triangle<double>, eval_vector_triangle<Complex>>},
      {"norms.vector_homogeneity", 2, gen_vector_homogeneity,
       by_field<eval_vector_homogeneity<double>,
                eval_vector_homogeneity<Complex>>},
      {"ineq.holder", 1, gen_holder,
       by_field<eval_holder<double>, eval_holder<Complex>>},
      {"ineq.young", 1, gen_young, real_only<eval_young>},
      {"ineq.young_equality", 2, gen_young_equality,
       real_only<eval_young_equality>},
      {"ineq.holder_normalized", 2, gen_holder_normalized,
       by_field<eval_holder_normalized<double>,
                eval_holder_normalized<Complex>>},
      {"ineq.product_holder", 1, gen_product_holder,
       by_field<eval_product_holder<double>, eval_product_holder<Complex>>},
      {"ineq.interpolation", 1, gen_interpolation,
       by_field<eval_interpolation<double>, eval_interpolation<Complex>>},
      {"ineq.minkowski", 1, gen_minkowski,
       by_field<eval_minkowski<double>, eval_minkowski<Complex>>},
      {"ineq.holder_witness_equality", 1, gen_holder_witness_equality,
       by_field<eval_holder_witness_equality<double>,
                eval_holder_witness_equality<Complex>>},
      {"ineq.scale_invariance", 2, gen_scale_invariance,
       by_field<eval_scale_invariance<double>, eval_scale_invariance<Complex>>},
      {"ineq.interpolation_paper_literal", 1, gen_interpolation_paper_literal,
       by_field<eval_interpolation_paper_literal<double>,
                eval_interpolation_paper_literal<Complex>>},
      {"ops.apply_linearity", 2, gen_apply_linearity,
       by_field<eval_apply_linearity<double>, eval_apply_linearity<Complex>>},
      {"ops.kernel_roundtrip", 2, gen_kernel_roundtrip,
       by_field<eval_kernel_roundtrip<double>, eval_kernel_roundtrip<Complex>>},
      {"ops.compose_consistency", 2, gen_compose_consistency,
       by_field<eval_compose_consistency<double>,
                eval_compose_consistency<Complex>>},
      {"ops.mult_norm", 1, gen_mult_norm,
       by_field<eval_mult_norm<double>, eval_mult_norm<Complex>>},
      {"ops.mult_sharpness", 1, gen_mult_sharpness,
       by_field<eval_mult_sharpness<double>, eval_mult_sharpness<Complex>>},
      {"ops.opnorm_attained", 8, gen_opnorm_attained,
       by_field<eval_opnorm_attained<double>, eval_opnorm_attained<Complex>>},
      {"ops.transfer_forward", 8, gen_transfer_forward,
       by_field<eval_transfer_forward<double>, eval_transfer_forward<Complex>>},
      {"ops.transfer_converse", 12, gen_transfer_converse,
       by_field<eval_transfer_converse<double>,
                eval_transfer_converse<Complex>>},
      {"ops.vector_transfer_reduction", 8, gen_vector_transfer_reduction,
       by_field<eval_vector_transfer_reduction<double>,
                eval_vector_transfer_reduction<Complex>>},
      {"ops.lift_commutation", 2, gen_lift_commutation,
       by_field<eval_lift_commutation<double>, eval_lift_commutation<Complex>>},
      {"ops.infone_implication", 4, gen_infone_implication,
       by_field<eval_infone_implication<double>,
                eval_infone_implication<Complex>>},
      {"ops.infone_construct", 8, gen_infone_construct,
       by_field<eval_infone_construct<double>, eval_infone_construct<Complex>>},
      {"trace.estimate_consistency", 10, gen_trace_consistency,
       by_field<eval_trace_consistency<double>,
                eval_trace_consistency<Complex>>},
      {"trace.duality_euclidean", 10, gen_trace_duality,
       by_field<eval_trace_duality<double>, eval_trace_duality<Complex>>},
      {"trace.homogeneity", 10, gen_trace_homogeneity,
       by_field<eval_trace_homogeneity<double>,
                eval_trace_homogeneity<Complex>>},
      {"trace.assemble_roundtrip", 4, gen_trace_roundtrip,
       by_field<eval_trace_roundtrip<double>, eval_trace_roundtrip<Complex>>},
      {"trace.monotone_subadditive", 20, gen_trace_monotone,
       by_field<eval_trace_monotone<double>, eval_trace_monotone<Complex>>},
  };
  return props;
}

bool is_paper_literal(const Property& prop) {
  return std::string_view(prop.name) == "ineq.interpolation_paper_literal";
}

const Property* find_property(const std::string& name) {
  const Property* match = nullptr;
  int hits = 0;
  for (const Property& prop : registry()) {
    const std::string_view full(prop.name);
    if (full == name) return &prop;
    const std::size_t dot = full.find('.');
    if (dot != std::string_view::npos && full.substr(dot + 1) == name) {
      match = &prop;
      ++hits;
    }
  }
  if (hits > 1) {
    throw usage_error("property name '" + name + "' is ambiguous");
  }
  return match;
}

void validate_config(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw usage_error("trials must be >= 1");
  if (cfg.n_min < 1) throw usage_error("n_min must be >= 1");
  if (cfg.n_max < cfg.n_min) throw usage_error("n_max must be >= n_min");
  if (cfg.exponent_pool.empty()) {
    throw usage_error("exponent pool must not be empty");
  }
  if (!(cfg.rel_tol > 0.0)) throw usage_error("rel_tol must be positive");
}

}  // namespace

std::vector<std::string> suite_property_names(const SuiteConfig& config) {
  std::vector<std::string> names;
  for (const Property& prop : registry()) {
    if (is_paper_literal(prop) && !config.paper_literal_interpolation) continue;
    names.emplace_back(prop.name);
  }
  return names;
}

Certificate check_instance(const json& instance) {
  const json& jn = require_field(instance, "name", "instance");
  if (!jn.is_string()) {
    throw schema_error("instance.name: expected a string");
  }
  const Property* prop = find_property(jn.get<std::string>());
  if (prop == nullptr) {
    throw usage_error("unknown property '" + jn.get<std::string>() + "'");
  }
  return prop->evaluate(instance);
}

SuiteReport run_suite(const SuiteConfig& config) { return run_suite(config, {}); }

SuiteReport run_suite(const SuiteConfig& config,
                      const std::vector<std::string>& only) {
  validate_config(config);
  std::vector<const Property*> selected;
  if (only.empty()) {
    for (const Property& prop : registry()) {
      if (is_paper_literal(prop) && !config.paper_literal_interpolation) {
        continue;
      }
      selected.push_back(&prop);
    }
  } else {
    for (const std::string& name : only) {
      const Property* prop = find_property(name);
      if (prop == nullptr) throw usage_error("unknown property '" + name + "'");
      selected.push_back(prop);
    }
  }

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;
  report.version = kVersion;
  for (const Property* prop : selected) {
    PropertyResult result;
    result.name = prop->name;
    const int trials = std::max(1, config.trials / prop->cost);
    const std::uint64_t stream = fnv1a64(prop->name);
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::stream(config.seed, stream, static_cast<std::uint64_t>(trial));
      json inst;
      try {
        inst = prop->generate(rng, config, trial);
        const Certificate cert = prop->evaluate(inst);
        ++result.trials;
        if (cert.status == CertStatus::violated) ++result.violations;
        if (cert.slack() < result.min_slack) {
          result.min_slack = cert.slack();
          result.min_slack_instance =
              json{{"instance", inst}, {"certificate", to_json(cert)}};
        }
      } catch (const std::exception& e) {
        ++result.trials;
        ++result.errors;
        if (result.first_error.is_null()) {
          result.first_error = json{{"instance", inst}, {"message", e.what()}};
        }
      }
    }
    report.properties.push_back(std::move(result));
  }
  report.passed = true;
  for (const PropertyResult& r : report.properties) {
    if (!r.passed()) report.passed = false;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

// ---------------------------------------------------------------------------
// JSON plumbing.

json to_json(const SuiteConfig& config) {
  json pool = json::array();
  for (const Exponent& e : config.exponent_pool) pool.push_back(to_json(e));
  return json{{"seed", config.seed},
              {"trials", config.trials},
              {"n_min", config.n_min},
              {"n_max", config.n_max},
              {"field", to_string(config.field)},
              {"weight_mode", to_string(config.weight_mode)},
              {"exponent_pool", std::move(pool)},
              {"rel_tol", config.rel_tol},
              {"paper_literal_interpolation", config.paper_literal_interpolation},
              {"budget", budget_to_json(config.budget)}};
}

SuiteConfig suite_config_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw schema_error(path + ": expected an object");
  SuiteConfig cfg;
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("n_min")) cfg.n_min = j["n_min"].get<int>();
  if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
  if (j.contains("field")) {
    cfg.field = field_from_string(j["field"].get<std::string>());
  }
  if (j.contains("weight_mode")) {
    cfg.weight_mode =
        weight_mode_from_string(j["weight_mode"].get<std::string>());
  }
  if (j.contains("exponent_pool")) {
    cfg.exponent_pool.clear();
    const json& pool = j["exponent_pool"];
    if (!pool.is_array()) {
      throw schema_error(path + ".exponent_pool: expected an array");
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      cfg.exponent_pool.push_back(exponent_from_json(
          pool[i], path + ".exponent_pool[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
  if (j.contains("paper_literal_interpolation")) {
    cfg.paper_literal_interpolation =
        j["paper_literal_interpolation"].get<bool>();
  }
  if (j.contains("budget")) {
    const json& b = j["budget"];
    cfg.budget.restarts = b.value("restarts", cfg.budget.restarts);
    cfg.budget.iterations = b.value("iterations", cfg.budget.iterations);
    cfg.budget.seed = b.value("seed", cfg.budget.seed);
  }
  try {
    validate_config(cfg);
  } catch (const usage_error& e) {
    throw schema_error(path + ": " + e.what());
  }
  return cfg;
}

json to_json(const PropertyResult& result) {
  return json{{"name", result.name},
              {"trials", result.trials},
              {"violations", result.violations},
              {"errors", result.errors},
              {"min_slack", result.min_slack},
              {"min_slack_instance", result.min_slack_instance},
              {"first_error", result.first_error},
              {"passed", result.passed()}};
}

json to_json(const SuiteReport& report) {
  json props = json::array();
  for (const PropertyResult& r : report.properties) props.push_back(to_json(r));
  return json{{"config", to_json(report.config)},
              {"version", report.version},
              {"properties", std::move(props)},
              {"passed", report.passed},
              {"elapsed_seconds", report.elapsed_seconds}};
}

// ---------------------------------------------------------------------------
// compute: the JSON front door.

namespace {

template <ScalarType T>
json compute_norm(const json& payload) {
  const Exponent p = exponent_from_json(require_field(payload, "p", "payload"),
                                        "payload.p");
  if (payload.contains("codomain")) {
    const auto f = vector_function_from_json<T>(payload, "payload");
    return json{{"value", vector_norm(f, p)}};
  }
  const auto f = scalar_function_from_json<T>(payload, "payload");
  return json{{"value", weighted_norm(f, p)}};
}

Exponent exp_in_payload(const json& payload, const char* key) {
  return exponent_from_json(require_field(payload, key, "payload"),
                            std::string("payload.") + key);
}

template <ScalarType T>
json compute_opnorm(const json& payload) {
  const auto a = kernel_of_json<T>(payload, "payload");
  const auto est =
      operator_norm(a, exp_in_payload(payload, "r"),
                    exp_in_payload(payload, "s"), budget_of(payload));
  json maximizer = json::array();
  for (const T& v : est.maximizer.values()) {
    maximizer.push_back(scalar_to_json(v));
  }
  return json{{"value", est.value},
              {"kind", to_string(est.kind)},
              {"lo", est.lo},
              {"hi", est.hi},
              {"maximizer", std::move(maximizer)}};
}

template <ScalarType T>
json compute_tracenorm(const json& payload) {
  const LinearMap<T> a = map_of<T>(payload);
  QuasinormBudget budget;
  if (payload.contains("quasinorm_budget")) {
    budget = quasinorm_budget_of(payload);
  }
  const auto est = trace_quasinorm(a, exp_in_payload(payload, "p"), budget);
  json coefficients = json::array();
  for (const auto& term : est.representation.terms) {
    coefficients.push_back(abs_value(term.c));
  }
  return json{{"value", est.value},
              {"p", to_json(est.p)},
              {"kind", to_string(est.kind)},
              {"terms", est.representation.terms.size()},
              {"coefficients", std::move(coefficients)}};
}

template <ScalarType T>
json compute_kernel(const json& payload) {
  const json& jop = require_field(payload, "op", "payload");
  if (!jop.is_string()) throw schema_error("payload.op: expected a string");
  const std::string op = jop.get<std::string>();
  if (op == "apply") {
    const auto a = kernel_of_json<T>(payload, "payload");
    const auto f = scalar_function_from_json<T>(
        require_field(payload, "f", "payload"), "payload.f");
    const auto g = apply(a, f);
    json values = json::array();
    for (const T& v : g.values()) values.push_back(scalar_to_json(v));
    return json{{"values", std::move(values)}};
  }
  if (op == "compose") {
    const auto a = kernel_of_json<T>(payload, "payload");
    const auto h1 = scalar_function_from_json<T>(
        require_field(payload, "h1", "payload"), "payload.h1");
    const auto h2 = scalar_function_from_json<T>(
        require_field(payload, "h2", "payload"), "payload.h2");
    return kernel_to_json(compose(h2, a, h1));
  }
  if (op == "infone_check") {
    const auto a = kernel_of_json<T>(payload, "payload");
    const int samples = payload.value("samples", 1000);
    const std::uint64_t seed = payload.value("seed", 0ull);
    const InfOneResult res = infone_condition_check(a, samples, seed);
    return json{{"condition", to_json(res.condition)},
                {"bound", to_json(res.bound)},
                {"bound_exact", res.bound_exact}};
  }
  if (op == "infone_construct") {
    const auto a = kernel_of_json<T>(payload, "payload");
    const auto h1 = scalar_function_from_json<T>(
        require_field(payload, "h1", "payload"), "payload.h1");
    const auto h2 = scalar_function_from_json<T>(
        require_field(payload, "h2", "payload"), "payload.h2");
    std::optional<double> norm_bound;
    if (payload.contains("norm_bound")) {
      norm_bound = payload["norm_bound"].get<double>();
    }
    return kernel_to_json(infone_construct(
        a, h1, h2, exp_in_payload(payload, "r"), exp_in_payload(payload, "s"),
        norm_bound, budget_of(payload)));
  }
  throw schema_error("payload.op: unknown kernel op '" + op + "'");
}

}  // namespace

json compute(const std::string& command, const json& payload) {
  const bool complex_field = instance_is_complex(payload);
  if (command == "norm") {
    return complex_field ? compute_norm<Complex>(payload)
                         : compute_norm<double>(payload);
  }
  if (command == "check") {
    return to_json(check_instance(payload));
  }
  if (command == "opnorm") {
    return complex_field ? compute_opnorm<Complex>(payload)
                         : compute_opnorm<double>(payload);
  }
  if (command == "tracenorm") {
    return complex_field ? compute_tracenorm<Complex>(payload)
                         : compute_tracenorm<double>(payload);
  }
  if (command == "kernel") {
    return complex_field ? compute_kernel<Complex>(payload)
                         : compute_kernel<double>(payload);
  }
  throw usage_error("unknown command '" + command + "'");
}

}  // namespace lpbench
