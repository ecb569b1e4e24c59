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

#include <optional>
#include <utility>

#include "lpbench/certificate.hpp"
#include "lpbench/errors.hpp"
#include "lpbench/exponent.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/norms.hpp"
#include "lpbench/scalar.hpp"

namespace lpbench {

namespace detail {

inline void require_conjugate(const Exponent& p, const Exponent& q) {
  if (!is_conjugate_pair(p, q)) {
    throw usage_error("exponents are not conjugate: 1/" + p.str() + " + 1/" +
                      q.str() + " != 1");
  }
}

template <ScalarType T>
T weighted_pairing(const ScalarFunction<T>& f1, const ScalarFunction<T>& f2) {
  const double* w = f1.domain().weights().data();
  T acc{};
  for (std::size_t i = 0; i < f1.size(); ++i) {
    acc += f1.value(i) * f2.value(i) * T{w[i]};
  }
  return acc;
}

}  // namespace detail

// Two functions paired under conjugate exponents, 1/p + 1/q = 1.
template <ScalarType T>
struct HolderInstance {
  ScalarFunction<T> f1;
  ScalarFunction<T> f2;
  Exponent p;
  Exponent q;
};

// |sum_x f1 f2 w| <= ||f1||_{w,p} ||f2||_{w,q}.
template <ScalarType T>
Certificate holder_certificate(const HolderInstance<T>& instance) {
  detail::require_conjugate(instance.p, instance.q);
  require_same_domain(instance.f1, instance.f2);
  const double lhs =
      abs_value(detail::weighted_pairing(instance.f1, instance.f2));
  const double rhs = weighted_norm(instance.f1, instance.p) *
                     weighted_norm(instance.f2, instance.q);
  return make_certificate(lhs, rhs);
}

// Pointwise Young: ab <= a^p/p + b^q/q for a, b >= 0, with equality exactly
// at a^p = b^q.
inline Certificate young_certificate(double a, double b, const Exponent& p,
                                     const Exponent& q) {
  if (p.is_infinite() || q.is_infinite()) {
    throw usage_error("young inequality needs finite exponents");
  }
  detail::require_conjugate(p, q);
  if (a < 0.0 || b < 0.0) {
    throw precondition_error("young inequality needs a, b >= 0");
  }
  const double lhs = a * b;
  const double rhs =
      pow_abs(a, p.value()) / p.value() + pow_abs(b, q.value()) / q.value();
  return make_certificate(lhs, rhs);
}

// Normalized form: for unit vectors, |sum f1 f2 w| <= 1 via the pointwise
// Young bound; the witness records the intermediate Young sum.
template <ScalarType T>
Certificate holder_normalized_form(const ScalarFunction<T>& f1,
                                   const ScalarFunction<T>& f2,
                                   const Exponent& p, const Exponent& q) {
  if (p.is_infinite() || q.is_infinite()) {
    throw usage_error("normalized form routes through Young, needs finite "
                      "conjugate exponents");
  }
  detail::require_conjugate(p, q);
  require_same_domain(f1, f2);
  const double n1 = weighted_norm(f1, p);
  const double n2 = weighted_norm(f2, q);
  if (!nearly_equal(n1, 1.0) || !nearly_equal(n2, 1.0)) {
    throw precondition_error("normalized form needs unit norms, got " +
                             std::to_string(n1) + " and " +
                             std::to_string(n2));
  }
  const double lhs = abs_value(detail::weighted_pairing(f1, f2));
  const double* w = f1.domain().weights().data();
  double young_middle = 0.0;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    young_middle += (pow_abs(abs_value(f1.value(i)), p.value()) / p.value() +
                     pow_abs(abs_value(f2.value(i)), q.value()) / q.value()) *
                    w[i];
  }
  return make_certificate(lhs, 1.0,
                          nlohmann::json{{"young_middle", young_middle}});
}

// ||f1 f2||_{w,r} <= ||f1||_{w,p} ||f2||_{w,q} for 1/r = 1/p + 1/q over
// 0 < p, q, r <= inf.
template <ScalarType T>
Certificate product_holder_certificate(const ScalarFunction<T>& f1,
                                       const ScalarFunction<T>& f2,
                                       const Exponent& p, const Exponent& q,
                                       const Exponent& r) {
  require_same_domain(f1, f2);
  if (std::abs(r.reciprocal() - p.reciprocal() - q.reciprocal()) > kRelTol) {
    throw usage_error("product exponents must satisfy 1/r = 1/p + 1/q");
  }
  const double lhs = weighted_norm(pointwise_multiply(f1, f2), r);
  const double rhs = weighted_norm(f1, p) * weighted_norm(f2, q);
  return make_certificate(lhs, rhs);
}

// Scale-invariant interpolation: 1/r = theta/p + (1-theta)/q gives
// ||f||_{w,r} <= ||f||_{w,p}^theta ||f||_{w,q}^(1-theta). Holds for every
// weight; endpoints theta = 0, 1 are equalities by construction.
template <ScalarType T>
Certificate interpolation_certificate(const ScalarFunction<T>& f,
                                      const Exponent& p, const Exponent& q,
                                      double theta) {
  if (!(p <= q)) {
    throw usage_error("interpolation needs p <= q");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw usage_error("interpolation parameter must be in [0, 1]");
  }
  const Exponent r = Exponent::from_reciprocal(theta * p.reciprocal() +
                                               (1.0 - theta) * q.reciprocal());
  const double norm_p = weighted_norm(f, p);
  const double norm_q = weighted_norm(f, q);
  double rhs;
  if (theta == 1.0) {
    rhs = norm_p;
  } else if (theta == 0.0) {
    rhs = norm_q;
  } else {
    rhs = pow_abs(norm_p, theta) * pow_abs(norm_q, 1.0 - theta);
  }
  return make_certificate(weighted_norm(f, r), rhs,
                          nlohmann::json{{"r", r.str()}});
}

// The uncorrected variant with exponents p/r and q/r on the right-hand
// side, 1/r = 1/p + 1/q. Not scale invariant; a singleton set with w = 1,
// f = 1/2, p = q = 2 already violates it (0.5 > 0.0625). Kept as a
// deliberately refutable mode behind an explicit CLI flag.
template <ScalarType T>
Certificate interpolation_paper_literal_certificate(const ScalarFunction<T>& f,
                                                    const Exponent& p,
                                                    const Exponent& q) {
  if (p.is_infinite() || q.is_infinite()) {
    throw usage_error("literal interpolation mode needs finite exponents");
  }
  const Exponent r =
      Exponent::from_reciprocal(p.reciprocal() + q.reciprocal());
  const double norm_p = weighted_norm(f, p);
  const double norm_q = weighted_norm(f, q);
  const double rhs = pow_abs(norm_p, p.value() / r.value()) *
                     pow_abs(norm_q, q.value() / r.value());
  return make_certificate(weighted_norm(f, r), rhs,
                          nlohmann::json{{"r", r.value()}});
}

// Triangle inequality data for 1 < p < inf: the power sum splits into two
// Holder-bounded pieces, sum |f1+f2|^p w <= s1 + s2 with
// s_i = sum |f_i| |f1+f2|^(p-1) w <= ||f_i||_p * (sum |f1+f2|^p w)^(1/q).
struct MinkowskiSplit {
  double power_sum = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double bound1 = 0.0;
  double bound2 = 0.0;
};

template <ScalarType T>
struct MinkowskiResult {
  Certificate certificate;
  std::optional<MinkowskiSplit> split;
};

template <ScalarType T>
MinkowskiResult<T> minkowski_certificate(const ScalarFunction<T>& f1,
                                         const ScalarFunction<T>& f2,
                                         const Exponent& p) {
  if (p.is_finite() && p.value() < 1.0) {
    throw usage_error("triangle inequality needs p >= 1; for p < 1 use the "
                      "p-power subadditivity form");
  }
  require_same_domain(f1, f2);
  const ScalarFunction<T> sum = add(f1, f2);
  MinkowskiResult<T> result;
  const double lhs = weighted_norm(sum, p);
  const double n1 = weighted_norm(f1, p);
  const double n2 = weighted_norm(f2, p);
  result.certificate = make_certificate(lhs, n1 + n2);
  if (p.is_finite() && p.value() > 1.0) {
    const double pv = p.value();
    const double* w = f1.domain().weights().data();
    MinkowskiSplit split;
    for (std::size_t i = 0; i < f1.size(); ++i) {
      const double m = abs_value(sum.value(i));
      const double mp1 = pow_abs(m, pv - 1.0);
      split.power_sum += pow_abs(m, pv) * w[i];
      split.s1 += abs_value(f1.value(i)) * mp1 * w[i];
      split.s2 += abs_value(f2.value(i)) * mp1 * w[i];
    }
    const double q = conjugate(p).value();
    split.bound1 = n1 * pow_abs(split.power_sum, 1.0 / q);
    split.bound2 = n2 * pow_abs(split.power_sum, 1.0 / q);
    result.split = split;
  }
  return result;
}

// For conjugate finite exponents and h not identically zero, builds f with
// |h f|^r = |h|^q = |f|^p pointwise (1/r = 1/p + 1/q), which makes Holder
// an equality: f(x) = conj(sgn(h(x))) |h(x)|^(q/p), zero where h vanishes.
template <ScalarType T>
ScalarFunction<T> holder_equality_witness(const ScalarFunction<T>& h,
                                          const Exponent& p,
                                          const Exponent& q) {
  if (p.is_infinite() || q.is_infinite()) {
    throw usage_error("equality witness needs finite conjugate exponents");
  }
  detail::require_conjugate(p, q);
  if (h.is_zero()) {
    throw degenerate_error("equality witness of the zero function");
  }
  const double exponent = q.value() / p.value();
  std::vector<T> values(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const T& hv = h.value(i);
    values[i] = conj_value(sgn(hv)) * T{pow_abs(abs_value(hv), exponent)};
  }
  return h.with_values(std::move(values));
}

}  // namespace lpbench
