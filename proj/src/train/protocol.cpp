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

#include "tgbench/train/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tgbench/common/error.hpp"

namespace tgbench::train {

LossAndGrad bce_loss(double p, int y) {
  if (y != 0 && y != 1) fail(ErrorKind::kInvalidArgument, "BCE label must be 0 or 1");
  if (std::isnan(p)) fail(ErrorKind::kNonFinite, "BCE probability is NaN");
  const double q = std::clamp(p, kProbabilityClamp, 1.0 - kProbabilityClamp);
  LossAndGrad out;
  if (y == 1) {
    out.loss = -std::log(q);
    out.dloss_dp = -1.0 / q;
  } else {
    out.loss = -std::log1p(-q);
    out.dloss_dp = 1.0 / (1.0 - q);
  }
  return out;
}

AdamState::AdamState(std::size_t n_params, double learning_rate)
    : first_moment(n_params, 0.0), second_moment(n_params, 0.0), lr(learning_rate) {}

void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.first_moment.size() ||
      params.size() != state.second_moment.size()) {
    fail(ErrorKind::kDimensionMismatch,
         "Adam step over " + std::to_string(params.size()) + " parameters with " +
             std::to_string(grads.size()) + " gradients and state of size " +
             std::to_string(state.first_moment.size()));
  }
  for (std::size_t i = 0; i < grads.size(); ++i) {
    if (!std::isfinite(grads[i])) {
      fail(ErrorKind::kNonFinite, "non-finite gradient at parameter " + std::to_string(i));
    }
  }
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double bias1 = 1.0 - std::pow(state.beta1, t);
  const double bias2 = 1.0 - std::pow(state.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    double& m = state.first_moment[i];
    double& v = state.second_moment[i];
    m = state.beta1 * m + (1.0 - state.beta1) * grads[i];
    v = state.beta2 * v + (1.0 - state.beta2) * grads[i] * grads[i];
    const double m_hat = m / bias1;
    const double v_hat = v / bias2;
    params[i] -= state.lr * m_hat / (std::sqrt(v_hat) + state.epsilon);
  }
}

bool EarlyStopMonitor::update(double value) {
  if (!std::isfinite(value)) {
    fail(ErrorKind::kNonFinite, "early-stopping value must be finite");
  }
  const std::size_t epoch = epoch_++;
  bool improved = !has_best_;
  if (has_best_) {
    const double rel = (value - best_) / std::max(std::fabs(best_), 1e-12);
    improved = rel > tolerance_;
  }
  improved_last_ = improved;
  if (improved) {
    best_ = value;
    has_best_ = true;
    best_epoch_ = epoch;
    rounds_ = 0;
    return false;
  }
  ++rounds_;
  return rounds_ > patience_;
}

AttentionDimVerdict validate_attention_dims(const AttentionDimConfig& c) {
  if (c.n_head == 0) fail(ErrorKind::kInvalidArgument, "n_head must be at least 1");
  const std::size_t total = c.d_node + c.d_edge + c.d_time + c.d_pos;
  AttentionDimVerdict v;
  v.remainder = total % c.n_head;
  v.valid = v.remainder == 0;
  return v;
}

}  // namespace tgbench::train
