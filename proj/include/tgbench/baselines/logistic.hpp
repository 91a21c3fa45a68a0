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

#ifndef TGBENCH_BASELINES_LOGISTIC_HPP_
#define TGBENCH_BASELINES_LOGISTIC_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "tgbench/baselines/predictor.hpp"
#include "tgbench/train/protocol.hpp"

namespace tgbench::baselines {

inline constexpr std::size_t kEdgeFeatureCount = 6;
using EdgeFeatures = std::array<double, kEdgeFeatureCount>;

// Per-node recency and degree plus per-pair counts, updated in stream order.
class TemporalFeatureState {
 public:
  explicit TemporalFeatureState(Timestamp stream_start = 0.0)
      : stream_start_(stream_start) {}

  void observe(NodeId src, NodeId dst, Timestamp t);
  void clear();

  // [log1p(dt_src), log1p(dt_dst), log1p(deg_src), log1p(deg_dst),
  //  log1p(pair_count), seen_flag]. A node with no history measures dt from
  // the stream start.
  EdgeFeatures featurize(NodeId src, NodeId dst, Timestamp t) const;

  Timestamp stream_start() const { return stream_start_; }

 private:
  struct NodeActivity {
    Timestamp last_time = 0.0;
    std::size_t degree = 0;
  };

  Timestamp stream_start_;
  std::unordered_map<NodeId, NodeActivity> nodes_;
  std::unordered_map<NodePair, std::size_t, NodePairHash> pairs_;
};

// p = sigmoid(w . x + b).
struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;

  LogisticModel() = default;
  explicit LogisticModel(std::size_t dim) : weights(dim, 0.0) {}

  std::size_t n_params() const { return weights.size() + 1; }
  std::vector<double> flat() const;
  void assign(std::span<const double> flat);
};

double logistic_forward(const LogisticModel& model, std::span<const double> x);

// Gradient of the clamped BCE loss w.r.t. (weights..., bias).
std::vector<double> logistic_backward(const LogisticModel& model,
                                      std::span<const double> x, int y);

// Softmax regression for multi-class heads: logits = W x + b, W is K x D.
struct SoftmaxModel {
  std::size_t n_classes = 0;
  std::size_t dim = 0;
  std::vector<double> weights;  // row-major K x D
  std::vector<double> bias;     // K

  SoftmaxModel() = default;
  SoftmaxModel(std::size_t classes, std::size_t d)
      : n_classes(classes), dim(d), weights(classes * d, 0.0), bias(classes, 0.0) {}

  std::size_t n_params() const { return weights.size() + bias.size(); }
  std::vector<double> flat() const;
  void assign(std::span<const double> flat);
};

std::vector<double> softmax_forward(const SoftmaxModel& model, std::span<const double> x);
double softmax_loss(const SoftmaxModel& model, std::span<const double> x, int y);
// Gradient of -log softmax(x)[y] w.r.t. (weights..., bias...).
std::vector<double> softmax_backward(const SoftmaxModel& model,
                                     std::span<const double> x, int y);

// Logistic regression over TemporalFeatureState features, trained with BCE
// and Adam on (positive, negative) batches.
class LogisticPredictor final : public Predictor {
 public:
  LogisticPredictor(Timestamp stream_start, double learning_rate);

  std::string_view id() const override { return "logistic"; }
  void reset_state() override { state_.clear(); }
  void observe(const graph::Interaction& e) override;
  std::vector<double> score_edges(std::span<const EdgeQuery> batch) const override;

  bool trainable() const override { return true; }
  double train_step(std::span<const EdgeQuery> positives,
                    std::span<const EdgeQuery> negatives) override;
  std::vector<double> parameters() const override { return model_.flat(); }
  void set_parameters(std::span<const double> params) override;

  const LogisticModel& model() const { return model_; }

 private:
  std::vector<double> feature_rows(std::span<const EdgeQuery> batch) const;

  TemporalFeatureState state_;
  LogisticModel model_;
  train::AdamState adam_;
};

}  // namespace tgbench::baselines

#endif  // TGBENCH_BASELINES_LOGISTIC_HPP_
