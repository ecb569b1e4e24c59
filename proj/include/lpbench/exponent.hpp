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

#include <cmath>
#include <limits>
#include <string>

#include "lpbench/errors.hpp"
#include "lpbench/tolerance.hpp"

namespace lpbench {

// A norm exponent: a finite value in (0, inf) or the symbol infinity.
// Exponent arithmetic (conjugates, derived exponents) goes through
// reciprocals, where infinity is exactly 0 and no special case leaks out.
class Exponent {
 public:
  // Default-constructs to 2; keeps the type regular for containers.
  constexpr Exponent() : value_(2.0) {}

  static Exponent finite(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw usage_error("exponent must be a finite value > 0, got " +
                        std::to_string(p));
    }
    Exponent e;
    e.value_ = p;
    return e;
  }

  static constexpr Exponent infinity() {
    Exponent e;
    e.value_ = std::numeric_limits<double>::infinity();
    return e;
  }

  // Accepts a finite value > 0 or +infinity.
  static Exponent from_value(double p) {
    return std::isinf(p) && p > 0 ? infinity() : finite(p);
  }

  // Inverse of reciprocal(): 0 maps to infinity. Tiny negative dust from
  // reciprocal arithmetic is clamped to infinity; anything clearly negative
  // is a usage error at the caller's site.
  static Exponent from_reciprocal(double r) {
    if (std::abs(r) <= kAbsFloor) return infinity();
    if (r < 0.0) {
      throw usage_error("derived exponent has negative reciprocal " +
                        std::to_string(r));
    }
    return finite(1.0 / r);
  }

  bool is_infinite() const { return std::isinf(value_); }
  bool is_finite() const { return !is_infinite(); }

  // Finite value; +infinity for the infinite exponent.
  double value() const { return value_; }

  // 1/p, exactly 0 for the infinite exponent.
  double reciprocal() const { return is_infinite() ? 0.0 : 1.0 / value_; }

  std::string str() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) {
    return !(a == b);
  }
  friend bool operator<(const Exponent& a, const Exponent& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Exponent& a, const Exponent& b) {
    return b < a;
  }
  friend bool operator>=(const Exponent& a, const Exponent& b) {
    return b <= a;
  }

 private:
  double value_;
};

// Conjugate exponent: 1/p + 1/q = 1. Defined for p >= 1.
inline Exponent conjugate(const Exponent& p) {
  if (p.is_infinite()) return Exponent::finite(1.0);
  if (p.value() < 1.0) {
    throw usage_error("conjugate exponent requires p >= 1, got " + p.str());
  }
  if (p.value() == 1.0) return Exponent::infinity();
  return Exponent::finite(p.value() / (p.value() - 1.0));
}

// True when 1/p + 1/q = 1 within the workbench tolerance.
inline bool is_conjugate_pair(const Exponent& p, const Exponent& q) {
  return std::abs(p.reciprocal() + q.reciprocal() - 1.0) <= kRelTol;
}

}  // namespace lpbench
