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

#include <functional>
#include <utility>
#include <vector>

#include "lpbench/errors.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/scalar.hpp"

namespace lpbench {

// A linear map on the value space V, stored as a dense row-major matrix.
template <ScalarType T>
struct ValueTransform {
  std::size_t dim;
  std::vector<T> matrix;  // row-major dim x dim

  ValueTransform(std::size_t d, std::vector<T> m)
      : dim(d), matrix(std::move(m)) {
    if (matrix.size() != dim * dim) {
      throw shape_error("value transform matrix must be dim x dim");
    }
  }

  static ValueTransform identity(std::size_t d) {
    std::vector<T> m(d * d, T{});
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = T{1.0};
    return ValueTransform(d, std::move(m));
  }
};

// Pointwise lift of a value transform: (A~ f)(x) = A(f(x)).
template <ScalarType T>
class LiftedValueTransform {
 public:
  explicit LiftedValueTransform(ValueTransform<T> transform)
      : transform_(std::move(transform)) {}

  const ValueTransform<T>& transform() const { return transform_; }

  VectorFunction<T> operator()(const VectorFunction<T>& f) const {
    const std::size_t d = transform_.dim;
    if (f.dim() != d) {
      throw shape_error("value transform dimension does not match codomain");
    }
    std::vector<T> out(f.flat_values().size(), T{});
    for (std::size_t x = 0; x < f.size(); ++x) {
      const auto v = f.value(x);
      for (std::size_t i = 0; i < d; ++i) {
        T acc{};
        for (std::size_t j = 0; j < d; ++j) {
          acc += transform_.matrix[i * d + j] * v[j];
        }
        out[x * d + i] = acc;
      }
    }
    return f.with_flat_values(std::move(out));
  }

 private:
  ValueTransform<T> transform_;
};

template <ScalarType T>
LiftedValueTransform<T> lift_value_transform(ValueTransform<T> transform) {
  return LiftedValueTransform<T>(std::move(transform));
}

// Index-side lift of a scalar operator T: (T^ f)_j = T(f_j) for each
// coordinate slice j. The scalar operator must preserve the index set.
template <ScalarType T>
class LiftedIndexTransform {
 public:
  using ScalarOp = std::function<ScalarFunction<T>(const ScalarFunction<T>&)>;

  explicit LiftedIndexTransform(ScalarOp op) : op_(std::move(op)) {}

  VectorFunction<T> operator()(const VectorFunction<T>& f) const {
    const std::size_t d = f.dim();
    const std::size_t n = f.size();
    std::vector<T> out(n * d, T{});
    std::vector<T> slice(n);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t x = 0; x < n; ++x) slice[x] = f.value(x)[j];
      ScalarFunction<T> transformed =
          op_(ScalarFunction<T>(f.domain_ptr(), slice));
      if (transformed.domain() != f.domain()) {
        throw lpbench::domain_error(
            "lifted operator must preserve the index set");
      }
      for (std::size_t x = 0; x < n; ++x) {
        out[x * d + j] = transformed.value(x);
      }
    }
    return f.with_flat_values(std::move(out));
  }

 private:
  ScalarOp op_;
};

template <ScalarType T>
LiftedIndexTransform<T> lift_index_transform(
    typename LiftedIndexTransform<T>::ScalarOp op) {
  return LiftedIndexTransform<T>(std::move(op));
}

}  // namespace lpbench
