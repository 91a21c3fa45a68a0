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

#ifndef TGBENCH_BASELINES_PREDICTOR_HPP_
#define TGBENCH_BASELINES_PREDICTOR_HPP_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgbench/common/types.hpp"
#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::baselines {

// What the link-prediction pipeline expects of any model. Predictors consume
// the stream strictly in order through observe(); score_edges() must only use
// what has been observed so far.
class Predictor {
 public:
  virtual ~Predictor() = default;

  virtual std::string_view id() const = 0;

  // Forgets observed events; learned parameters are kept.
  virtual void reset_state() = 0;
  virtual void observe(const graph::Interaction& e) = 0;
  virtual std::vector<double> score_edges(std::span<const EdgeQuery> batch) const = 0;

  virtual bool trainable() const { return false; }
  // One optimizer step on a batch of positives and aligned negatives scored
  // against the current state. Returns the mean loss.
  virtual double train_step(std::span<const EdgeQuery> positives,
                            std::span<const EdgeQuery> negatives);
  virtual std::vector<double> parameters() const { return {}; }
  virtual void set_parameters(std::span<const double> params);
};

// Model hyperparameters from `model.*` configuration keys (prefix removed).
using ModelOptions = std::map<std::string, std::string>;

// Stream facts a model may need for its defaults.
struct ModelContext {
  Timestamp stream_start = 0.0;
  Timestamp train_start = 0.0;
  Timestamp train_end = 0.0;
  double learning_rate = 1e-4;
  std::uint64_t init_seed = 0;
};

// Known ids: edgebank, edgebank-window, time-decay, logistic.
std::unique_ptr<Predictor> make_predictor(std::string_view model_id,
                                          const ModelContext& ctx,
                                          const ModelOptions& options = {});

const std::vector<std::string>& registered_models();

}  // namespace tgbench::baselines

#endif  // TGBENCH_BASELINES_PREDICTOR_HPP_
