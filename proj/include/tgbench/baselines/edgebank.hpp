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

#ifndef TGBENCH_BASELINES_EDGEBANK_HPP_
#define TGBENCH_BASELINES_EDGEBANK_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <unordered_map>

#include "tgbench/baselines/predictor.hpp"

namespace tgbench::baselines {

struct PairRecord {
  Timestamp last_time = 0.0;
  std::size_t count = 0;
};

// Memorized pairs. With a window w, a pair only counts when it was last seen
// within [t - w, t).
struct EdgeMemory {
  std::unordered_map<NodePair, PairRecord, NodePairHash> seen;
  std::optional<double> window;
  Timestamp latest = -std::numeric_limits<double>::infinity();
};

// Records (src, dst) at t. Throws kOutOfOrder when t precedes an earlier update.
void edgebank_update(EdgeMemory& mem, const EdgeQuery& e);

// 1 when the pair is remembered (inside the window, if any), else 0.
double edgebank_score(const EdgeMemory& mem, NodeId src, NodeId dst, Timestamp t);

// Memorization baseline; the window variant forgets pairs older than w.
class EdgeBankPredictor final : public Predictor {
 public:
  explicit EdgeBankPredictor(std::optional<double> window = std::nullopt);

  std::string_view id() const override;
  void reset_state() override;
  void observe(const graph::Interaction& e) override;
  std::vector<double> score_edges(std::span<const EdgeQuery> batch) const override;

  const EdgeMemory& memory() const { return mem_; }

 private:
  EdgeMemory mem_;
};

// exp(-(t - last_time) / tau) for remembered pairs, 0 for unseen pairs.
class TimeDecayPredictor final : public Predictor {
 public:
  explicit TimeDecayPredictor(double tau);

  std::string_view id() const override { return "time-decay"; }
  void reset_state() override;
  void observe(const graph::Interaction& e) override;
  std::vector<double> score_edges(std::span<const EdgeQuery> batch) const override;

 private:
  double tau_;
  EdgeMemory mem_;
};

// Default window: the length of the last 15% of the training span.
double default_window(Timestamp train_start, Timestamp train_end);

}  // namespace tgbench::baselines

#endif  // TGBENCH_BASELINES_EDGEBANK_HPP_
