/*
 * Copyright 2026 The tgbench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TGBENCH_BASELINES_NODE_HEAD_HPP_
#define TGBENCH_BASELINES_NODE_HEAD_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "tgbench/baselines/logistic.hpp"
#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::baselines {

// Temporal features of the interaction followed by its edge features.
std::vector<double> node_class_features(const TemporalFeatureState& state,
                                        const graph::TemporalGraph& graph, EdgeId e);

// Classifier over per-interaction feature rows. Two classes use a logistic
// model with BCE, more classes a softmax model with cross entropy; both are
// trained with Adam.
class NodeClassHead {
 public:
  NodeClassHead(std::size_t n_classes, std::size_t input_dim, double learning_rate);

  std::size_t n_classes() const { return n_classes_; }
  std::size_t input_dim() const { return input_dim_; }
  bool binary() const { return n_classes_ == 2; }

  // rows is row-major, labels.size() rows. Returns the mean loss.
  double train_step(std::span<const double> rows, std::span<const int> labels);

  // Binary: P(class 1) per row. Multi-class: row-major n x K probabilities.
  std::vector<double> predict(std::span<const double> rows) const;

  std::vector<double> parameters() const;
  void set_parameters(std::span<const double> params);

 private:
  std::size_t n_classes_;
  std::size_t input_dim_;
  LogisticModel binary_;
  SoftmaxModel multi_;
  train::AdamState adam_;
};

}  // namespace tgbench::baselines

#endif  // TGBENCH_BASELINES_NODE_HEAD_HPP_
