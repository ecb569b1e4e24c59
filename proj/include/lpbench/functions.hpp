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

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpbench/errors.hpp"
#include "lpbench/normed_space.hpp"
#include "lpbench/scalar.hpp"
#include "lpbench/weighted_set.hpp"

namespace lpbench {

namespace detail {
inline std::shared_ptr<const WeightedSet> share(WeightedSet set) {
  return std::make_shared<const WeightedSet>(std::move(set));
}
}  // namespace detail

// A scalar-valued function on a weighted set. Values are stored in the
// set's enumeration order. Immutable; pointwise operations return new
// functions sharing the domain.
template <ScalarType T>
class ScalarFunction {
 public:
  ScalarFunction(std::shared_ptr<const WeightedSet> domain,
                 std::vector<T> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_->size()) {
      throw shape_error("function has " + std::to_string(values_.size()) +
                        " values on a set of size " +
                        std::to_string(domain_->size()));
    }
  }

  ScalarFunction(WeightedSet domain, std::vector<T> values)
      : ScalarFunction(detail::share(std::move(domain)), std::move(values)) {}

  const WeightedSet& domain() const { return *domain_; }
  const std::shared_ptr<const WeightedSet>& domain_ptr() const {
    return domain_;
  }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  const T& value(std::size_t i) const { return values_[i]; }
  const T& at(const std::string& label) const {
    return values_[domain_->index_of(label)];
  }

  ScalarFunction with_values(std::vector<T> values) const {
    return ScalarFunction(domain_, std::move(values));
  }

  bool is_zero() const {
    for (const T& v : values_) {
      if (v != T{}) return false;
    }
    return true;
  }

 private:
  std::shared_ptr<const WeightedSet> domain_;
  std::vector<T> values_;
};

// A function into a normed value space V. Values are stored flat,
// row-major: point index slow, coordinate fast.
template <ScalarType T>
class VectorFunction {
 public:
  VectorFunction(std::shared_ptr<const WeightedSet> domain,
                 NormedSpace<T> codomain, std::vector<T> flat_values)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        values_(std::move(flat_values)) {
    if (values_.size() != domain_->size() * codomain_.dim()) {
      throw shape_error(
          "vector function needs " +
          std::to_string(domain_->size() * codomain_.dim()) +
          " scalars, got " + std::to_string(values_.size()));
    }
  }

  VectorFunction(WeightedSet domain, NormedSpace<T> codomain,
                 std::vector<T> flat_values)
      : VectorFunction(detail::share(std::move(domain)), std::move(codomain),
                       std::move(flat_values)) {}

  const WeightedSet& domain() const { return *domain_; }
  const std::shared_ptr<const WeightedSet>& domain_ptr() const {
    return domain_;
  }
  const NormedSpace<T>& codomain() const { return codomain_; }
  std::size_t size() const { return domain_->size(); }
  std::size_t dim() const { return codomain_.dim(); }

  std::span<const T> value(std::size_t i) const {
    return {values_.data() + i * codomain_.dim(), codomain_.dim()};
  }
  const std::vector<T>& flat_values() const { return values_; }

  VectorFunction with_flat_values(std::vector<T> values) const {
    return VectorFunction(domain_, codomain_, std::move(values));
  }

 private:
  std::shared_ptr<const WeightedSet> domain_;
  NormedSpace<T> codomain_;
  std::vector<T> values_;
};

template <ScalarType T>
void require_same_domain(const ScalarFunction<T>& a,
                         const ScalarFunction<T>& b) {
  if (a.domain_ptr() != b.domain_ptr() && a.domain() != b.domain()) {
    throw lpbench::domain_error("functions live on different weighted sets");
  }
}

template <ScalarType T>
void require_same_domain(const ScalarFunction<T>& a,
                         const VectorFunction<T>& b) {
  if (a.domain_ptr() != b.domain_ptr() && a.domain() != b.domain()) {
    throw lpbench::domain_error("functions live on different weighted sets");
  }
}

// Indicator of a single point.
template <ScalarType T = double>
ScalarFunction<T> delta(std::shared_ptr<const WeightedSet> domain,
                        const std::string& label) {
  const std::size_t i = domain->index_of(label);
  std::vector<T> values(domain->size(), T{});
  values[i] = T{1.0};
  return ScalarFunction<T>(std::move(domain), std::move(values));
}

template <ScalarType T = double>
ScalarFunction<T> delta(const WeightedSet& domain, const std::string& label) {
  return delta<T>(detail::share(domain), label);
}

// Pointwise product (f1 * f2)(x) = f1(x) * f2(x).
template <ScalarType T>
ScalarFunction<T> pointwise_multiply(const ScalarFunction<T>& f1,
                                     const ScalarFunction<T>& f2) {
  require_same_domain(f1, f2);
  std::vector<T> values(f1.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f1.value(i) * f2.value(i);
  }
  return f1.with_values(std::move(values));
}

// Pointwise scaling of a vector-valued function by a scalar function.
template <ScalarType T>
VectorFunction<T> pointwise_multiply(const ScalarFunction<T>& h,
                                     const VectorFunction<T>& f) {
  require_same_domain(h, f);
  std::vector<T> values(f.flat_values());
  const std::size_t d = f.dim();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) values[i * d + j] *= h.value(i);
  }
  return f.with_flat_values(std::move(values));
}

template <ScalarType T>
ScalarFunction<T> add(const ScalarFunction<T>& f1, const ScalarFunction<T>& f2) {
  require_same_domain(f1, f2);
  std::vector<T> values(f1.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f1.value(i) + f2.value(i);
  }
  return f1.with_values(std::move(values));
}

template <ScalarType T>
ScalarFunction<T> scale(const T& c, const ScalarFunction<T>& f) {
  std::vector<T> values(f.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = c * f.value(i);
  return f.with_values(std::move(values));
}

template <ScalarType T>
VectorFunction<T> add(const VectorFunction<T>& f1, const VectorFunction<T>& f2) {
  if (f1.domain() != f2.domain() || f1.codomain() != f2.codomain()) {
    throw lpbench::domain_error(
        "vector functions live on different spaces");
  }
  std::vector<T> values(f1.flat_values());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] += f2.flat_values()[i];
  }
  return f1.with_flat_values(std::move(values));
}

template <ScalarType T>
VectorFunction<T> scale(const T& c, const VectorFunction<T>& f) {
  std::vector<T> values(f.flat_values());
  for (T& v : values) v *= c;
  return f.with_flat_values(std::move(values));
}

// curry: a scalar function on a product set E1 x E2, read as a function on
// E1 with values in F(E2). Values transfer in place: the product set's
// row-major order is exactly the flat layout of the result. The codomain
// norm on F(E2) defaults to weighted l2 over (E2, w2); the identification
// itself is about values only.
template <ScalarType T>
VectorFunction<T> curry(const ScalarFunction<T>& f) {
  const WeightedSet& product = f.domain();
  if (!product.is_product()) {
    throw usage_error("curry needs a function on a product set");
  }
  const WeightedSet& e2 = product.factor2();
  return curry(f, NormedSpace<T>::weighted_lp(Exponent::finite(2.0),
                                              e2.weights()));
}

template <ScalarType T>
VectorFunction<T> curry(const ScalarFunction<T>& f,
                        const NormedSpace<T>& codomain) {
  const WeightedSet& product = f.domain();
  if (!product.is_product()) {
    throw usage_error("curry needs a function on a product set");
  }
  const WeightedSet& e2 = product.factor2();
  if (codomain.dim() != e2.size()) {
    throw shape_error("curry codomain dimension " +
                      std::to_string(codomain.dim()) +
                      " does not match second factor size " +
                      std::to_string(e2.size()));
  }
  return VectorFunction<T>(detail::share(product.factor1()), codomain,
                           f.values());
}

// uncurry: inverse identification. The product set is rebuilt from the
// factors with the deterministic product construction, so
// uncurry(curry(f), E2) reproduces f exactly, labels included.
template <ScalarType T>
ScalarFunction<T> uncurry(const VectorFunction<T>& g, const WeightedSet& e2) {
  if (g.dim() != e2.size()) {
    throw shape_error("uncurry: codomain dimension " +
                      std::to_string(g.dim()) +
                      " does not match factor size " +
                      std::to_string(e2.size()));
  }
  return ScalarFunction<T>(WeightedSet::product(g.domain(), e2),
                           g.flat_values());
}

}  // namespace lpbench
