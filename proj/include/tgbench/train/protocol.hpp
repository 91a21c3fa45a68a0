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

#ifndef TGBENCH_TRAIN_PROTOCOL_HPP_
#define TGBENCH_TRAIN_PROTOCOL_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace tgbench::train {

inline constexpr double kProbabilityClamp = 1e-7;

struct LossAndGrad {
  double loss = 0.0;
  double dloss_dp = 0.0;
};

// Binary cross entropy on p clamped to [1e-7, 1 - 1e-7]; the derivative is
// evaluated at the clamped probability.
LossAndGrad bce_loss(double p, int y);

struct AdamState {
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::size_t step = 0;
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  AdamState() = default;
  explicit AdamState(std::size_t n_params, double learning_rate = 1e-4);
};

// One bias-corrected Adam update in place. Throws kDimensionMismatch or, for
// a non-finite gradient, kNonFinite (parameters and state are then left
// untouched).
void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state);

// Early stopping on a higher-is-better validation value. A value improves when
// (value - best) / max(|best|, 1e-12) > tolerance; the first value always
// improves. Training stops once more than `patience` consecutive values fail
// to improve.
class EarlyStopMonitor {
 public:
  explicit EarlyStopMonitor(std::size_t patience = 3, double tolerance = 1e-3)
      : patience_(patience), tolerance_(tolerance) {}

  // Returns true when training should stop.
  bool update(double value);

  double best() const { return best_; }
  std::size_t best_epoch() const { return best_epoch_; }
  std::size_t epochs_seen() const { return epoch_; }
  std::size_t rounds_without_improvement() const { return rounds_; }
  bool improved_last() const { return improved_last_; }
  std::size_t patience() const { return patience_; }
  double tolerance() const { return tolerance_; }

 private:
  std::size_t patience_;
  double tolerance_;
  double best_ = 0.0;
  bool has_best_ = false;
  std::size_t best_epoch_ = 0;
  std::size_t epoch_ = 0;
  std::size_t rounds_ = 0;
  bool improved_last_ = false;
};

struct AttentionDimConfig {
  std::size_t d_node = 0;
  std::size_t d_edge = 0;
  std::size_t d_time = 0;
  std::size_t d_pos = 0;
  std::size_t n_head = 1;
};

struct AttentionDimVerdict {
  bool valid = false;
  std::size_t remainder = 0;
};

// The concatenated attention input must split evenly across heads.
AttentionDimVerdict validate_attention_dims(const AttentionDimConfig& c);

}  // namespace tgbench::train

#endif  // TGBENCH_TRAIN_PROTOCOL_HPP_
