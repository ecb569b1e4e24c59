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
#include <memory>
#include <string>
#include <vector>

namespace lpbench {

// A finite index set with a strictly positive weight per point. Immutable
// after construction. Product sets remember their factors so currying can
// recover them; the stored order is the enumeration order everywhere
// (sums, serialization, witnesses).
class WeightedSet {
 public:
  WeightedSet(std::vector<std::string> labels, std::vector<double> weights);

  // Labels "0".."n-1" with the given weights.
  static WeightedSet indexed(std::vector<double> weights);

  // Cartesian product: labels "a|b" in row-major order (first factor slow),
  // weights w1(a)*w2(b). Factor structure is retained.
  static WeightedSet product(const WeightedSet& e1, const WeightedSet& e2);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  // Index of a label; throws domain_error when absent.
  std::size_t index_of(const std::string& label) const;

  double total_weight() const { return total_weight_; }
  // Total weight equal to 1 within the workbench tolerance.
  bool is_probability() const;
  // Every weight equal to 1 exactly.
  bool is_unit() const;

  bool is_product() const { return factors_ != nullptr; }
  const WeightedSet& factor1() const;
  const WeightedSet& factor2() const;

  friend bool operator==(const WeightedSet& a, const WeightedSet& b) {
    return a.labels_ == b.labels_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const WeightedSet& a, const WeightedSet& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
  std::shared_ptr<const std::pair<WeightedSet, WeightedSet>> factors_;
};

}  // namespace lpbench
