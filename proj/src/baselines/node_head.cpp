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

#include "tgbench/baselines/node_head.hpp"

#include <string>

#include "tgbench/common/error.hpp"

namespace tgbench::baselines {

std::vector<double> node_class_features(const TemporalFeatureState& state,
                                        const graph::TemporalGraph& graph, EdgeId e) {
  const graph::Interaction& it = graph[e];
  const EdgeFeatures f = state.featurize(it.src, it.dst, it.timestamp);
  std::vector<double> row(f.begin(), f.end());
  for (float v : graph.edge_features(e)) row.push_back(v);
  return row;
}

NodeClassHead::NodeClassHead(std::size_t n_classes, std::size_t input_dim,
                             double learning_rate)
    : n_classes_(n_classes), input_dim_(input_dim) {
  if (n_classes < 2) {
    fail(ErrorKind::kSingleClass, "node classification needs at least two classes");
  }
  if (input_dim == 0) fail(ErrorKind::kInvalidArgument, "input dimension must be positive");
  if (binary()) {
    binary_ = LogisticModel(input_dim);
    adam_ = train::AdamState(binary_.n_params(), learning_rate);
  } else {
    multi_ = SoftmaxModel(n_classes, input_dim);
    adam_ = train::AdamState(multi_.n_params(), learning_rate);
  }
}

double NodeClassHead::train_step(std::span<const double> rows, std::span<const int> labels) {
  if (rows.size() != labels.size() * input_dim_) {
    fail(ErrorKind::kDimensionMismatch, "feature rows do not match the label count");
  }
  if (labels.empty()) return 0.0;
  std::vector<double> params = parameters();
  std::vector<double> grad(params.size(), 0.0);
  double loss = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto x = rows.subspan(i * input_dim_, input_dim_);
    std::vector<double> g;
    if (binary()) {
      loss += train::bce_loss(logistic_forward(binary_, x), labels[i]).loss;
      g = logistic_backward(binary_, x, labels[i]);
    } else {
      loss += softmax_loss(multi_, x, labels[i]);
      g = softmax_backward(multi_, x, labels[i]);
    }
    for (std::size_t k = 0; k < g.size(); ++k) grad[k] += g[k];
  }
  const double n = static_cast<double>(labels.size());
  for (double& g : grad) g /= n;
  train::adam_step(params, grad, adam_);
  set_parameters(params);
  return loss / n;
}

std::vector<double> NodeClassHead::predict(std::span<const double> rows) const {
  if (rows.size() % input_dim_ != 0) {
    fail(ErrorKind::kDimensionMismatch, "feature rows are not a multiple of the input size");
  }
  const std::size_t n = rows.size() / input_dim_;
  std::vector<double> out;
  out.reserve(binary() ? n : n * n_classes_);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = rows.subspan(i * input_dim_, input_dim_);
    if (binary()) {
      out.push_back(logistic_forward(binary_, x));
    } else {
      const std::vector<double> p = softmax_forward(multi_, x);
      out.insert(out.end(), p.begin(), p.end());
    }
  }
  return out;
}

std::vector<double> NodeClassHead::parameters() const {
  return binary() ? binary_.flat() : multi_.flat();
}

void NodeClassHead::set_parameters(std::span<const double> params) {
  if (binary()) {
    binary_.assign(params);
  } else {
    multi_.assign(params);
  }
}

}  // namespace tgbench::baselines
