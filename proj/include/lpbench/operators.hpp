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

#include <cstddef>
#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "lpbench/certificate.hpp"
#include "lpbench/errors.hpp"
#include "lpbench/exponent.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/kernels.hpp"
#include "lpbench/norms.hpp"
#include "lpbench/scalar.hpp"
#include "lpbench/weighted_set.hpp"

namespace lpbench {

// Linear operator given by a kernel, with the weight inside the sum:
// A(f)(x) = sum_y a(x,y) f(y) w(y). Under this convention the identity
// operator has kernel delta_{xy}/w(y), and the kernel entries are the
// operator applied to the normalized delta basis. Entries are row-major,
// row index x.
template <ScalarType T>
class KernelOperator {
 public:
  KernelOperator(std::shared_ptr<const WeightedSet> domain,
                 std::vector<T> kernel)
      : domain_(std::move(domain)), kernel_(std::move(kernel)) {
    const std::size_t n = domain_->size();
    if (kernel_.size() != n * n) {
      throw shape_error("kernel needs " + std::to_string(n * n) +
                        " entries, got " + std::to_string(kernel_.size()));
    }
  }

  KernelOperator(WeightedSet domain, std::vector<T> kernel)
      : KernelOperator(detail::share(std::move(domain)), std::move(kernel)) {}

  const WeightedSet& domain() const { return *domain_; }
  const std::shared_ptr<const WeightedSet>& domain_ptr() const {
    return domain_;
  }
  std::size_t size() const { return domain_->size(); }
  const std::vector<T>& kernel() const { return kernel_; }
  const T& entry(std::size_t x, std::size_t y) const {
    return kernel_[x * domain_->size() + y];
  }
  const T* row(std::size_t x) const {
    return kernel_.data() + x * domain_->size();
  }

  // Plain matrix of the action on values, m(x,y) = a(x,y) w(y); the inverse
  // of from_matrix.
  std::vector<T> matrix() const {
    const std::size_t n = size();
    const double* w = domain_->weights().data();
    std::vector<T> m(kernel_);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) m[x * n + y] *= T{w[y]};
    }
    return m;
  }

  static KernelOperator from_matrix(std::shared_ptr<const WeightedSet> domain,
                                    std::vector<T> m) {
    const std::size_t n = domain->size();
    if (m.size() != n * n) {
      throw shape_error("matrix needs " + std::to_string(n * n) +
                        " entries, got " + std::to_string(m.size()));
    }
    const double* w = domain->weights().data();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) m[x * n + y] /= T{w[y]};
    }
    return KernelOperator(std::move(domain), std::move(m));
  }

 private:
  std::shared_ptr<const WeightedSet> domain_;
  std::vector<T> kernel_;
};

// M_h(f)(x) = h(x) f(x), for scalar and vector-valued f alike.
template <ScalarType T>
class MultiplicationOperator {
 public:
  explicit MultiplicationOperator(ScalarFunction<T> symbol)
      : symbol_(std::move(symbol)) {}

  const ScalarFunction<T>& symbol() const { return symbol_; }

  ScalarFunction<T> operator()(const ScalarFunction<T>& f) const {
    return pointwise_multiply(symbol_, f);
  }
  VectorFunction<T> operator()(const VectorFunction<T>& f) const {
    return pointwise_multiply(symbol_, f);
  }

 private:
  ScalarFunction<T> symbol_;
};

template <ScalarType T = double>
KernelOperator<T> identity_kernel(std::shared_ptr<const WeightedSet> domain) {
  const std::size_t n = domain->size();
  const double* w = domain->weights().data();
  std::vector<T> kernel(n * n, T{});
  for (std::size_t x = 0; x < n; ++x) kernel[x * n + x] = T{1.0 / w[x]};
  return KernelOperator<T>(std::move(domain), std::move(kernel));
}

template <ScalarType T = double>
KernelOperator<T> identity_kernel(const WeightedSet& domain) {
  return identity_kernel<T>(detail::share(domain));
}

namespace detail {

template <ScalarType T>
ScalarFunction<T> apply_impl(const KernelOperator<T>& a,
                             const ScalarFunction<T>& f) {
  if (a.domain_ptr() != f.domain_ptr() && a.domain() != f.domain()) {
    throw lpbench::domain_error("operator and function domains differ");
  }
  const std::size_t n = a.size();
  const double* w = a.domain().weights().data();
  std::vector<T> out(n);
  if constexpr (is_complex_v<T>) {
    for (std::size_t x = 0; x < n; ++x) {
      const T* row = a.row(x);
      T acc{};
      for (std::size_t y = 0; y < n; ++y) acc += row[y] * T{w[y]} * f.value(y);
      out[x] = acc;
    }
  } else {
    const auto& k = kernels::active();
    for (std::size_t x = 0; x < n; ++x) {
      out[x] = k.dot_w(a.row(x), w, f.values().data(), n);
    }
  }
  return ScalarFunction<T>(f.domain_ptr() ? f.domain_ptr() : a.domain_ptr(),
                           std::move(out));
}

template <ScalarType T>
ScalarFunction<T> apply_impl(const MultiplicationOperator<T>& m,
                             const ScalarFunction<T>& f) {
  return m(f);
}

template <ScalarType T>
VectorFunction<T> apply_impl(const MultiplicationOperator<T>& m,
                             const VectorFunction<T>& f) {
  return m(f);
}

}  // namespace detail

// Single constrained entry point. When T is std::complex, argument-dependent
// lookup drags std::apply into every unqualified call; a constrained
// forwarding-reference template outranks it, so callers never collide.
template <typename Op, typename Fn>
  requires requires(const std::remove_cvref_t<Op>& op,
                    const std::remove_cvref_t<Fn>& fn) {
    lpbench::detail::apply_impl(op, fn);
  }
auto apply(Op&& op, Fn&& fn) {
  return detail::apply_impl(op, fn);
}

// Kernel realizing a black-box linear action by probing the delta basis:
// a(x,y) = action(delta_y)(x) / w(y). Exact up to the final division; a
// kernel-backed action round-trips through the overload below, which
// returns the stored kernel verbatim.
template <ScalarType T>
KernelOperator<T> kernel_of(
    const std::function<ScalarFunction<T>(const ScalarFunction<T>&)>& action,
    std::shared_ptr<const WeightedSet> domain) {
  const std::size_t n = domain->size();
  const double* w = domain->weights().data();
  std::vector<T> kernel(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    const ScalarFunction<T> column =
        action(delta<T>(domain, domain->labels()[y]));
    if (column.size() != n) {
      throw shape_error("action changed the domain size");
    }
    for (std::size_t x = 0; x < n; ++x) {
      kernel[x * n + y] = column.value(x) / T{w[y]};
    }
  }
  return KernelOperator<T>(std::move(domain), std::move(kernel));
}

template <ScalarType T>
KernelOperator<T> kernel_of(const KernelOperator<T>& a) {
  return a;
}

template <ScalarType T>
KernelOperator<T> kernel_of(const MultiplicationOperator<T>& m) {
  const auto& domain = m.symbol().domain_ptr();
  const std::size_t n = domain->size();
  const double* w = domain->weights().data();
  std::vector<T> kernel(n * n, T{});
  for (std::size_t x = 0; x < n; ++x) {
    kernel[x * n + x] = m.symbol().value(x) / T{w[x]};
  }
  return KernelOperator<T>(domain, std::move(kernel));
}

// Kernel of M_{h2} . A . M_{h1}: b(x,y) = h2(x) a(x,y) h1(y), computed in
// exactly that association so composition tests can compare entries
// bitwise.
template <ScalarType T>
KernelOperator<T> compose(const ScalarFunction<T>& h2,
                          const KernelOperator<T>& a,
                          const ScalarFunction<T>& h1) {
  if (h1.domain() != a.domain() || h2.domain() != a.domain()) {
    throw lpbench::domain_error("composition factors live on different sets");
  }
  const std::size_t n = a.size();
  std::vector<T> kernel(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      kernel[x * n + y] = h2.value(x) * a.entry(x, y) * h1.value(y);
    }
  }
  return KernelOperator<T>(a.domain_ptr(), std::move(kernel));
}

namespace detail {

inline void require_product_exponents(const Exponent& p, const Exponent& q,
                                      const Exponent& r) {
  if (std::abs(r.reciprocal() - p.reciprocal() - q.reciprocal()) > kRelTol) {
    throw usage_error("multiplication exponents must satisfy 1/r = 1/p + 1/q");
  }
}

}  // namespace detail

// ||h f||_{w,r} <= ||h||_{w,q} ||f||_{w,p} with 1/r = 1/p + 1/q: the
// multiplication operator M_h maps l^p(w) into l^r(w) with norm at most
// ||h||_{w,q}.
template <ScalarType T>
Certificate mult_norm_certificate(const ScalarFunction<T>& h,
                                  const ScalarFunction<T>& f,
                                  const Exponent& p, const Exponent& q,
                                  const Exponent& r) {
  detail::require_product_exponents(p, q, r);
  require_same_domain(h, f);
  const double lhs = weighted_norm(pointwise_multiply(h, f), r);
  const double rhs = weighted_norm(h, q) * weighted_norm(f, p);
  return make_certificate(lhs, rhs);
}

// Vector-valued form: the value norm replaces the modulus on both sides.
template <ScalarType T>
Certificate mult_norm_certificate(const ScalarFunction<T>& h,
                                  const VectorFunction<T>& f,
                                  const Exponent& p, const Exponent& q,
                                  const Exponent& r) {
  detail::require_product_exponents(p, q, r);
  require_same_domain(h, f);
  const double lhs = vector_norm(pointwise_multiply(h, f), r);
  const double rhs = weighted_norm(h, q) * vector_norm(f, p);
  return make_certificate(lhs, rhs);
}

// Witness that the multiplication bound is sharp: f with
// |h f|^r = |h|^q = |f|^p pointwise, which forces equality in the
// certificate above. Finite exponents give f = |h|^(q/p); each infinite
// exponent has its own adjusted witness. Tie-breaks take the first label
// in enumeration order.
template <ScalarType T>
ScalarFunction<T> mult_sharpness_witness(const ScalarFunction<T>& h,
                                         const Exponent& p, const Exponent& q,
                                         const Exponent& r) {
  detail::require_product_exponents(p, q, r);
  if (h.is_zero()) {
    throw degenerate_error("sharpness witness of the zero symbol");
  }
  const std::size_t n = h.size();
  std::vector<T> values(n, T{});
  if (p.is_infinite()) {
    // ||f||_inf = 1 with |h f| = |h| pointwise: the constant one.
    std::fill(values.begin(), values.end(), T{1.0});
  } else if (q.is_infinite()) {
    // r = p; a unit mass at the peak of |h| turns both sides into
    // |h(x*)| w(x*)^(1/p).
    std::size_t best = 0;
    double best_mod = abs_value(h.value(0));
    for (std::size_t i = 1; i < n; ++i) {
      const double m = abs_value(h.value(i));
      if (m > best_mod) {
        best = i;
        best_mod = m;
      }
    }
    values[best] = T{1.0};
  } else {
    const double exponent = q.value() / p.value();
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = T{pow_abs(abs_value(h.value(i)), exponent)};
    }
  }
  return h.with_values(std::move(values));
}

}  // namespace lpbench
