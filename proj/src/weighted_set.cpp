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

#include "lpbench/weighted_set.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "lpbench/errors.hpp"
#include "lpbench/tolerance.hpp"

namespace lpbench {

WeightedSet::WeightedSet(std::vector<std::string> labels,
                         std::vector<double> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.empty()) {
    throw shape_error("weighted set must be nonempty");
  }
  if (labels_.size() != weights_.size()) {
    throw shape_error("weighted set has " + std::to_string(labels_.size()) +
                      " labels but " + std::to_string(weights_.size()) +
                      " weights");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw domain_error("duplicate label '" + label + "' in weighted set");
    }
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw precondition_error("weight of '" + labels_[i] +
                               "' must be finite and > 0, got " +
                               std::to_string(weights_[i]));
    }
  }
  for (double w : weights_) total_weight_ += w;
}

WeightedSet WeightedSet::indexed(std::vector<double> weights) {
  std::vector<std::string> labels(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    labels[i] = std::to_string(i);
  }
  return WeightedSet(std::move(labels), std::move(weights));
}

WeightedSet WeightedSet::product(const WeightedSet& e1, const WeightedSet& e2) {
  std::vector<std::string> labels;
  std::vector<double> weights;
  labels.reserve(e1.size() * e2.size());
  weights.reserve(e1.size() * e2.size());
  for (std::size_t i = 0; i < e1.size(); ++i) {
    for (std::size_t j = 0; j < e2.size(); ++j) {
      labels.push_back(e1.label(i) + "|" + e2.label(j));
      weights.push_back(e1.weight(i) * e2.weight(j));
    }
  }
  WeightedSet result(std::move(labels), std::move(weights));
  result.factors_ =
      std::make_shared<const std::pair<WeightedSet, WeightedSet>>(e1, e2);
  return result;
}

std::size_t WeightedSet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw domain_error("label '" + label + "' is not in the weighted set");
}

bool WeightedSet::is_probability() const {
  return nearly_equal(total_weight_, 1.0);
}

bool WeightedSet::is_unit() const {
  for (double w : weights_) {
    if (w != 1.0) return false;
  }
  return true;
}

const WeightedSet& WeightedSet::factor1() const {
  if (!is_product()) throw usage_error("weighted set has no product structure");
  return factors_->first;
}

const WeightedSet& WeightedSet::factor2() const {
  if (!is_product()) throw usage_error("weighted set has no product structure");
  return factors_->second;
}

}  // namespace lpbench
