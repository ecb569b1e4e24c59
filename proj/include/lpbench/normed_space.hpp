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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpbench/detail/pnorm.hpp"
#include "lpbench/errors.hpp"
#include "lpbench/exponent.hpp"
#include "lpbench/scalar.hpp"

namespace lpbench {

// A finite-dimensional value space with a (quasi)norm evaluator. The lp and
// weighted-lp kinds carry exact structure (duals, declared subadditivity);
// custom evaluators only promise positive homogeneity and definiteness.
template <ScalarType T>
class NormedSpace {
 public:
  enum class Kind { lp, weighted_lp, custom };

  static NormedSpace lp(Exponent p, std::size_t dim) {
    NormedSpace s;
    s.kind_ = Kind::lp;
    s.dim_ = check_dim(dim);
    s.exponent_ = p;
    s.weights_.assign(dim, 1.0);
    s.declared_subadditivity_ = default_subadditivity(p);
    return s;
  }

  static NormedSpace weighted_lp(Exponent p, std::vector<double> weights) {
    NormedSpace s;
    s.kind_ = Kind::weighted_lp;
    s.dim_ = check_dim(weights.size());
    s.exponent_ = p;
    for (double w : weights) {
      if (!(w > 0.0)) {
        throw precondition_error("weighted lp space needs weights > 0");
      }
    }
    s.weights_ = std::move(weights);
    s.declared_subadditivity_ = default_subadditivity(p);
    return s;
  }

  static NormedSpace custom(std::size_t dim,
                            std::function<double(std::span<const T>)> eval,
                            std::string name,
                            std::optional<double> declared_subadditivity = {},
                            std::optional<double> declared_quasinorm_constant = {}) {
    NormedSpace s;
    s.kind_ = Kind::custom;
    s.dim_ = check_dim(dim);
    s.custom_eval_ = std::move(eval);
    s.name_ = std::move(name);
    s.declared_subadditivity_ = declared_subadditivity;
    s.declared_quasinorm_constant_ = declared_quasinorm_constant;
    return s;
  }

  // One-dimensional scalars with absolute value; the reduction identity
  // between scalar and vector-valued norms is stated against this space.
  static NormedSpace scalars() { return lp(Exponent::finite(1.0), 1); }

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool is_lp_kind() const { return kind_ != Kind::custom; }

  // Exponent of an lp/weighted-lp space; usage error on custom spaces.
  const Exponent& exponent() const {
    if (!is_lp_kind()) {
      throw usage_error("custom normed space has no lp exponent");
    }
    return exponent_;
  }

  const std::vector<double>& lp_weights() const {
    if (!is_lp_kind()) {
      throw usage_error("custom normed space has no lp weights");
    }
    return weights_;
  }

  std::optional<double> declared_subadditivity() const {
    return declared_subadditivity_;
  }
  std::optional<double> declared_quasinorm_constant() const {
    return declared_quasinorm_constant_;
  }

  // True when the space's definition claims the triangle inequality.
  bool claims_triangle() const {
    if (is_lp_kind()) {
      return exponent_.is_infinite() || exponent_.value() >= 1.0;
    }
    return declared_subadditivity_.has_value() &&
           *declared_subadditivity_ >= 1.0;
  }

  double evaluate(std::span<const T> v) const {
    if (v.size() != dim_) {
      throw shape_error("value has dimension " + std::to_string(v.size()) +
                        ", space has dimension " + std::to_string(dim_));
    }
    if (kind_ == Kind::custom) return custom_eval_(v);
    if (dim_ == 1) return detail::modulus(v[0]);
    if constexpr (is_complex_v<T>) {
      if (exponent_.is_finite() && exponent_.value() == 2.0) {
        const double* zd = reinterpret_cast<const double*>(v.data());
        return std::sqrt(
            kernels::active().sum_sq_w_cplx(zd, weights_.data(), dim_));
      }
    }
    return detail::weighted_p_norm(v.data(), weights_.data(), dim_,
                                   exponent_);
  }

  // Structural equality; custom spaces compare by name and dimension.
  friend bool operator==(const NormedSpace& a, const NormedSpace& b) {
    if (a.kind_ != b.kind_ || a.dim_ != b.dim_) return false;
    if (a.kind_ == Kind::custom) return a.name_ == b.name_;
    return a.exponent_ == b.exponent_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const NormedSpace& a, const NormedSpace& b) {
    return !(a == b);
  }

 private:
  NormedSpace() = default;

  static std::size_t check_dim(std::size_t dim) {
    if (dim == 0) throw shape_error("normed space must have dimension >= 1");
    return dim;
  }

  static std::optional<double> default_subadditivity(const Exponent& p) {
    if (p.is_infinite() || p.value() >= 1.0) return 1.0;
    return p.value();
  }

  Kind kind_ = Kind::lp;
  std::size_t dim_ = 1;
  Exponent exponent_ = Exponent::finite(2.0);
  std::vector<double> weights_;
  std::function<double(std::span<const T>)> custom_eval_;
  std::string name_;
  std::optional<double> declared_subadditivity_;
  std::optional<double> declared_quasinorm_constant_;
};

}  // namespace lpbench
