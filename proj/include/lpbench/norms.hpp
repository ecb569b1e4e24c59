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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpbench/certificate.hpp"
#include "lpbench/detail/pnorm.hpp"
#include "lpbench/errors.hpp"
#include "lpbench/exponent.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/json_io.hpp"
#include "lpbench/rng.hpp"
#include "lpbench/scalar.hpp"

namespace lpbench {

// ||f||_{w,p} = (sum_x |f(x)|^p w(x))^{1/p}; ||f||_inf = max_x |f(x)|
// (the weight plays no role at p = inf).
template <ScalarType T>
double weighted_norm(const ScalarFunction<T>& f, const Exponent& p) {
  return detail::weighted_p_norm(f.values().data(),
                                 f.domain().weights().data(), f.size(), p);
}

// ||f||_{w,p,V}: the scalar norm of x -> ||f(x)||_V. Reduces to
// weighted_norm bit for bit when V is the one-dimensional scalar space.
template <ScalarType T>
double vector_norm(const VectorFunction<T>& f, const Exponent& p) {
  std::vector<double> moduli(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    moduli[i] = f.codomain().evaluate(f.value(i));
  }
  return detail::weighted_p_norm(moduli.data(), f.domain().weights().data(),
                                 f.size(), p);
}

// Weight regime of the two-sided monotonicity statements.
enum class MonotonicityMode { unit_weight, probability_weight, not_applicable };

inline const char* to_string(MonotonicityMode m) {
  switch (m) {
    case MonotonicityMode::unit_weight:
      return "unit_weight";
    case MonotonicityMode::probability_weight:
      return "probability_weight";
    case MonotonicityMode::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

// Norm comparison across exponents p <= q. Unit weights: ||f||_q <= ||f||_p,
// with the sup bound ||f||_inf <= ||f||_p alongside. Probability weights:
// the direction reverses, ||f||_{w,p} <= ||f||_{w,q}, with
// ||f||_{w,p} <= ||f||_inf alongside. Other weights: not applicable, no
// certificate.
struct MonotonicityResult {
  MonotonicityMode mode = MonotonicityMode::not_applicable;
  std::optional<Certificate> certificate;
  std::optional<Certificate> sup_bound;
};

template <ScalarType T>
MonotonicityResult monotonicity_certificate(const ScalarFunction<T>& f,
                                            const Exponent& p,
                                            const Exponent& q) {
  if (!(p <= q)) {
    throw usage_error("monotonicity needs p <= q, got p=" + p.str() +
                      ", q=" + q.str());
  }
  MonotonicityResult result;
  const double norm_p = weighted_norm(f, p);
  const double norm_q = weighted_norm(f, q);
  const double norm_inf = weighted_norm(f, Exponent::infinity());
  if (f.domain().is_unit()) {
    result.mode = MonotonicityMode::unit_weight;
    result.certificate = make_certificate(norm_q, norm_p);
    result.sup_bound = make_certificate(norm_inf, norm_p);
  } else if (f.domain().is_probability()) {
    result.mode = MonotonicityMode::probability_weight;
    result.certificate = make_certificate(norm_p, norm_q);
    result.sup_bound = make_certificate(norm_p, norm_inf);
  }
  return result;
}

// Jensen for the convex power t -> t^r, r >= 1, under a probability weight:
// (sum_x phi(x) w(x))^r <= sum_x phi(x)^r w(x) for nonnegative real phi.
template <ScalarType T>
Certificate jensen_power_certificate(const ScalarFunction<T>& phi,
                                     const Exponent& r) {
  if (r.is_infinite()) {
    throw usage_error("jensen power certificate needs a finite exponent");
  }
  if (r.value() < 1.0) {
    throw usage_error("jensen power certificate needs r >= 1, got " + r.str());
  }
  if (!phi.domain().is_probability()) {
    throw precondition_error(
        "jensen power certificate needs a probability weight, total " +
        std::to_string(phi.domain().total_weight()));
  }
  std::vector<double> values(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const T& v = phi.value(i);
    if constexpr (is_complex_v<T>) {
      if (v.imag() != 0.0 || v.real() < 0.0) {
        throw precondition_error(
            "jensen power certificate needs nonnegative real values");
      }
      values[i] = v.real();
    } else {
      if (v < 0.0) {
        throw precondition_error(
            "jensen power certificate needs nonnegative real values");
      }
      values[i] = v;
    }
  }
  const double* w = phi.domain().weights().data();
  double mean = 0.0;
  double mean_of_powers = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    mean += values[i] * w[i];
    mean_of_powers += pow_abs(values[i], r.value()) * w[i];
  }
  return make_certificate(pow_abs(mean, r.value()), mean_of_powers);
}

namespace detail {

template <ScalarType T>
std::vector<T> random_vector(Rng& rng, std::size_t dim, double sparsity) {
  std::vector<T> v(dim);
  const double scale = std::pow(10.0, rng.uniform(-1.0, 2.0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (sparsity > 0.0 && rng.coin(sparsity)) {
      v[i] = T{};
    } else if constexpr (is_complex_v<T>) {
      v[i] = rng.gaussian_complex() * scale;
    } else {
      v[i] = rng.gaussian() * scale;
    }
  }
  return v;
}

template <ScalarType T>
json values_to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const T& x : v) out.push_back(scalar_to_json(x));
  return out;
}

// Largest p in (0, 1] with N(u+v)^p <= N(u)^p + N(v)^p for one pair. The
// feasible set is an interval (0, p*]; bisection returns a value inside it.
inline double pair_subadditivity_exponent(double nu, double nv, double ns) {
  const auto holds_at = [&](double p) {
    return std::pow(nu, p) + std::pow(nv, p) >= std::pow(ns, p);
  };
  if (ns <= (nu + nv) * (1.0 + kRelTol)) return 1.0;
  if (nu == 0.0 || nv == 0.0) return 0.0;  // ns > max(nu, nv): no p works
  double lo = 1e-8;
  double hi = 1.0;
  if (!holds_at(lo)) return 0.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (holds_at(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace detail

enum class NormVerdict { norm, p_subadditive, quasinorm, violated };

inline const char* to_string(NormVerdict v) {
  switch (v) {
    case NormVerdict::norm:
      return "norm";
    case NormVerdict::p_subadditive:
      return "p_subadditive";
    case NormVerdict::quasinorm:
      return "quasinorm";
    case NormVerdict::violated:
      return "violated";
  }
  return "unknown";
}

// Sampling-based classification of an evaluator: triangle inequality on
// random pairs, the largest sampled p-power subadditivity exponent, the
// sampled quasinorm constant, a unit-ball midpoint convexity probe when the
// space claims the triangle inequality, and checks of any declared
// properties. The verdict is over the sample only.
struct ClassificationReport {
  NormVerdict verdict = NormVerdict::norm;
  double sampled_p_max = 1.0;
  double sampled_quasinorm_constant = 1.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool triangle_ok = true;
  bool convexity_ok = true;
  std::optional<std::string> violated_property;
  nlohmann::json violation_witness;
};

template <ScalarType T>
ClassificationReport classify_norm(const NormedSpace<T>& space,
                                   std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw usage_error("classify_norm needs trials >= 1");
  ClassificationReport report;
  report.trials = trials;
  report.seed = seed;

  const auto record_violation = [&](const std::string& property,
                                    const std::vector<T>& u,
                                    const std::vector<T>& v) {
    if (report.verdict == NormVerdict::violated) return;
    report.verdict = NormVerdict::violated;
    report.violated_property = property;
    report.violation_witness = json{{"u", detail::values_to_json(u)},
                                    {"v", detail::values_to_json(v)}};
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, /*stream_id=*/0xC1A55, trial);
    const double sparsity = rng.coin(0.5) ? 0.35 : 0.0;
    std::vector<T> u = detail::random_vector<T>(rng, space.dim(), sparsity);
    std::vector<T> v = detail::random_vector<T>(rng, space.dim(), sparsity);
    std::vector<T> sum(space.dim());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = u[i] + v[i];

    const double nu = space.evaluate(std::span<const T>(u));
    const double nv = space.evaluate(std::span<const T>(v));
    const double ns = space.evaluate(std::span<const T>(sum));
    if (nu + nv == 0.0) continue;

    const double ratio = ns / (nu + nv);
    report.sampled_quasinorm_constant =
        std::max(report.sampled_quasinorm_constant, ratio);
    if (ratio > 1.0 + kRelTol) report.triangle_ok = false;
    report.sampled_p_max =
        std::min(report.sampled_p_max,
                 detail::pair_subadditivity_exponent(nu, nv, ns));

    if (auto declared = space.declared_subadditivity()) {
      const double lhs = std::pow(ns, *declared);
      const double rhs = std::pow(nu, *declared) + std::pow(nv, *declared);
      if (lhs > rhs + certificate_tolerance(rhs)) {
        record_violation("declared_subadditivity", u, v);
      }
    }
    if (auto declared = space.declared_quasinorm_constant()) {
      if (ratio > *declared * (1.0 + kRelTol)) {
        record_violation("declared_quasinorm_constant", u, v);
      }
    }

    if (space.claims_triangle() && nu > 0.0 && nv > 0.0) {
      // Midpoint probe: points scaled into the unit ball, midpoint must stay
      // inside (up to tolerance) if the ball is convex.
      const double su = rng.uniform(0.25, 1.0) / nu;
      const double sv = rng.uniform(0.25, 1.0) / nv;
      std::vector<T> mid(space.dim());
      for (std::size_t i = 0; i < mid.size(); ++i) {
        mid[i] = (u[i] * T{su} + v[i] * T{sv}) * T{0.5};
      }
      if (space.evaluate(std::span<const T>(mid)) > 1.0 + 1e-7) {
        report.convexity_ok = false;
        record_violation("unit_ball_convexity", u, v);
      }
    }
  }

  if (report.verdict != NormVerdict::violated) {
    if (report.triangle_ok) {
      report.verdict = NormVerdict::norm;
    } else if (report.sampled_p_max >= 1e-3) {
      report.verdict = NormVerdict::p_subadditive;
    } else {
      report.verdict = NormVerdict::quasinorm;
    }
  }
  return report;
}

// For a space declared p-subadditive, certifies the descended q-power
// inequality N(u+v)^q <= N(u)^q + N(v)^q, q <= p, on sampled pairs. The
// certificate reports the worst pair.
template <ScalarType T>
Certificate subadditivity_descends(const NormedSpace<T>& space, double p,
                                   double q, std::size_t samples,
                                   std::uint64_t seed) {
  if (!(q > 0.0) || q > p || p > 1.0) {
    throw usage_error("subadditivity descent needs 0 < q <= p <= 1");
  }
  const auto declared = space.declared_subadditivity();
  if (!declared || *declared < p - kRelTol) {
    throw usage_error(
        "space is not declared p-subadditive for the requested p");
  }
  if (samples == 0) throw usage_error("need samples >= 1");

  double worst_slack = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  json worst_witness;
  for (std::size_t trial = 0; trial < samples; ++trial) {
    Rng rng = Rng::stream(seed, /*stream_id=*/0xDE5C, trial);
    const double sparsity = rng.coin(0.5) ? 0.35 : 0.0;
    std::vector<T> u = detail::random_vector<T>(rng, space.dim(), sparsity);
    std::vector<T> v = detail::random_vector<T>(rng, space.dim(), sparsity);
    std::vector<T> sum(space.dim());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = u[i] + v[i];
    const double lhs =
        pow_abs(space.evaluate(std::span<const T>(sum)), q);
    const double rhs = pow_abs(space.evaluate(std::span<const T>(u)), q) +
                       pow_abs(space.evaluate(std::span<const T>(v)), q);
    if (rhs - lhs < worst_slack) {
      worst_slack = rhs - lhs;
      worst_lhs = lhs;
      worst_rhs = rhs;
      worst_witness = json{{"u", detail::values_to_json(u)},
                           {"v", detail::values_to_json(v)},
                           {"samples", samples}};
    }
  }
  return make_certificate(worst_lhs, worst_rhs, std::move(worst_witness));
}

}  // namespace lpbench
