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

#include "tgbench/baselines/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tgbench/common/error.hpp"
#include "tgbench/kernels/kernels.hpp"

namespace tgbench::baselines {

void TemporalFeatureState::observe(NodeId src, NodeId dst, Timestamp t) {
  NodeActivity& s = nodes_[src];
  s.last_time = t;
  ++s.degree;
  if (dst != src) {
    NodeActivity& d = nodes_[dst];
    d.last_time = t;
    ++d.degree;
  }
  ++pairs_[{src, dst}];
}

void TemporalFeatureState::clear() {
  nodes_.clear();
  pairs_.clear();
}

EdgeFeatures TemporalFeatureState::featurize(NodeId src, NodeId dst, Timestamp t) const {
  const auto recency = [&](NodeId v, std::size_t& degree) {
    const auto it = nodes_.find(v);
    if (it == nodes_.end()) {
      degree = 0;
      return std::max(0.0, t - stream_start_);
    }
    degree = it->second.degree;
    return std::max(0.0, t - it->second.last_time);
  };
  std::size_t deg_src = 0;
  std::size_t deg_dst = 0;
  const double dt_src = recency(src, deg_src);
  const double dt_dst = recency(dst, deg_dst);
  const auto pit = pairs_.find({src, dst});
  const std::size_t pair_count = pit == pairs_.end() ? 0 : pit->second;
  return {std::log1p(dt_src),
          std::log1p(dt_dst),
          std::log1p(static_cast<double>(deg_src)),
          std::log1p(static_cast<double>(deg_dst)),
          std::log1p(static_cast<double>(pair_count)),
          pair_count > 0 ? 1.0 : 0.0};
}

std::vector<double> LogisticModel::flat() const {
  std::vector<double> out(weights);
  out.push_back(bias);
  return out;
}

void LogisticModel::assign(std::span<const double> flat) {
  if (flat.size() != n_params()) {
    fail(ErrorKind::kDimensionMismatch, "logistic parameter vector has the wrong length");
  }
  std::copy(flat.begin(), flat.end() - 1, weights.begin());
  bias = flat.back();
}

double logistic_forward(const LogisticModel& model, std::span<const double> x) {
  if (x.size() != model.weights.size()) {
    fail(ErrorKind::kDimensionMismatch,
         "feature length " + std::to_string(x.size()) + " does not match " +
             std::to_string(model.weights.size()) + " weights");
  }
  double z = model.bias;
  for (std::size_t k = 0; k < x.size(); ++k) z += model.weights[k] * x[k];
  return kernels::sigmoid(z);
}

std::vector<double> logistic_backward(const LogisticModel& model,
                                      std::span<const double> x, int y) {
  const double p = logistic_forward(model, x);
  // dL/dz = dL/dp * dp/dz with dp/dz = p (1 - p).
  const double dz = train::bce_loss(p, y).dloss_dp * p * (1.0 - p);
  std::vector<double> grad(model.n_params());
  for (std::size_t k = 0; k < x.size(); ++k) grad[k] = dz * x[k];
  grad.back() = dz;
  return grad;
}

std::vector<double> SoftmaxModel::flat() const {
  std::vector<double> out(weights);
  out.insert(out.end(), bias.begin(), bias.end());
  return out;
}

void SoftmaxModel::assign(std::span<const double> flat) {
  if (flat.size() != n_params()) {
    fail(ErrorKind::kDimensionMismatch, "softmax parameter vector has the wrong length");
  }
  std::copy(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(weights.size()),
            weights.begin());
  std::copy(flat.begin() + static_cast<std::ptrdiff_t>(weights.size()), flat.end(),
            bias.begin());
}

std::vector<double> softmax_forward(const SoftmaxModel& model, std::span<const double> x) {
  if (x.size() != model.dim) {
    fail(ErrorKind::kDimensionMismatch, "feature length does not match softmax input size");
  }
  std::vector<double> logits(model.n_classes);
  for (std::size_t c = 0; c < model.n_classes; ++c) {
    double z = model.bias[c];
    for (std::size_t k = 0; k < model.dim; ++k) z += model.weights[c * model.dim + k] * x[k];
    logits[c] = z;
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (double& z : logits) {
    z = std::exp(z - top);
    total += z;
  }
  for (double& z : logits) z /= total;
  return logits;
}

double softmax_loss(const SoftmaxModel& model, std::span<const double> x, int y) {
  const std::vector<double> p = softmax_forward(model, x);
  return -std::log(std::max(p.at(static_cast<std::size_t>(y)), train::kProbabilityClamp));
}

std::vector<double> softmax_backward(const SoftmaxModel& model,
                                     std::span<const double> x, int y) {
  if (y < 0 || static_cast<std::size_t>(y) >= model.n_classes) {
    fail(ErrorKind::kInvalidArgument, "class label out of range");
  }
  std::vector<double> p = softmax_forward(model, x);
  p[static_cast<std::size_t>(y)] -= 1.0;
  std::vector<double> grad(model.n_params());
  for (std::size_t c = 0; c < model.n_classes; ++c) {
    for (std::size_t k = 0; k < model.dim; ++k) grad[c * model.dim + k] = p[c] * x[k];
    grad[model.weights.size() + c] = p[c];
  }
  return grad;
}

LogisticPredictor::LogisticPredictor(Timestamp stream_start, double learning_rate)
    : state_(stream_start),
      model_(kEdgeFeatureCount),
      adam_(kEdgeFeatureCount + 1, learning_rate) {}

void LogisticPredictor::observe(const graph::Interaction& e) {
  state_.observe(e.src, e.dst, e.timestamp);
}

std::vector<double> LogisticPredictor::feature_rows(std::span<const EdgeQuery> batch) const {
  std::vector<double> rows;
  rows.reserve(batch.size() * kEdgeFeatureCount);
  for (const EdgeQuery& q : batch) {
    const EdgeFeatures f = state_.featurize(q.src, q.dst, q.timestamp);
    rows.insert(rows.end(), f.begin(), f.end());
  }
  return rows;
}

std::vector<double> LogisticPredictor::score_edges(std::span<const EdgeQuery> batch) const {
  const std::vector<double> rows = feature_rows(batch);
  return kernels::logistic_scores(rows, kEdgeFeatureCount, model_.weights, model_.bias);
}

double LogisticPredictor::train_step(std::span<const EdgeQuery> positives,
                                     std::span<const EdgeQuery> negatives) {
  const std::size_t n = positives.size() + negatives.size();
  if (n == 0) return 0.0;
  std::vector<double> grad(model_.n_params(), 0.0);
  double loss = 0.0;
  const auto accumulate = [&](std::span<const EdgeQuery> batch, int y) {
    for (const EdgeQuery& q : batch) {
      const EdgeFeatures f = state_.featurize(q.src, q.dst, q.timestamp);
      loss += train::bce_loss(logistic_forward(model_, f), y).loss;
      const std::vector<double> g = logistic_backward(model_, f, y);
      for (std::size_t k = 0; k < g.size(); ++k) grad[k] += g[k];
    }
  };
  accumulate(positives, 1);
  accumulate(negatives, 0);
  for (double& g : grad) g /= static_cast<double>(n);

  std::vector<double> params = model_.flat();
  train::adam_step(params, grad, adam_);
  model_.assign(params);
  return loss / static_cast<double>(n);
}

void LogisticPredictor::set_parameters(std::span<const double> params) {
  model_.assign(params);
}

}  // namespace tgbench::baselines
