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

#include "tgbench/baselines/edgebank.hpp"

#include <cmath>
#include <string>

#include "tgbench/common/error.hpp"

namespace tgbench::baselines {

void edgebank_update(EdgeMemory& mem, const EdgeQuery& e) {
  if (e.timestamp < mem.latest) {
    fail(ErrorKind::kOutOfOrder,
         "edge at t=" + std::to_string(e.timestamp) +
             " arrives after an update at t=" + std::to_string(mem.latest));
  }
  mem.latest = e.timestamp;
  PairRecord& rec = mem.seen[e.pair()];
  rec.last_time = e.timestamp;
  ++rec.count;
}

double edgebank_score(const EdgeMemory& mem, NodeId src, NodeId dst, Timestamp t) {
  const auto it = mem.seen.find({src, dst});
  if (it == mem.seen.end()) return 0.0;
  if (!mem.window) return 1.0;
  const double last = it->second.last_time;
  return last >= t - *mem.window && last < t ? 1.0 : 0.0;
}

double default_window(Timestamp train_start, Timestamp train_end) {
  return 0.15 * (train_end - train_start);
}

EdgeBankPredictor::EdgeBankPredictor(std::optional<double> window) {
  if (window && !(*window > 0.0)) {
    fail(ErrorKind::kInvalidArgument, "EdgeBank window must be positive");
  }
  mem_.window = window;
}

std::string_view EdgeBankPredictor::id() const {
  return mem_.window ? "edgebank-window" : "edgebank";
}

void EdgeBankPredictor::reset_state() {
  const auto window = mem_.window;
  mem_ = EdgeMemory{};
  mem_.window = window;
}

void EdgeBankPredictor::observe(const graph::Interaction& e) {
  edgebank_update(mem_, e.query());
}

std::vector<double> EdgeBankPredictor::score_edges(std::span<const EdgeQuery> batch) const {
  std::vector<double> out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out[i] = edgebank_score(mem_, batch[i].src, batch[i].dst, batch[i].timestamp);
  }
  return out;
}

TimeDecayPredictor::TimeDecayPredictor(double tau) : tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    fail(ErrorKind::kInvalidArgument, "time-decay tau must be positive");
  }
}

void TimeDecayPredictor::reset_state() { mem_ = EdgeMemory{}; }

void TimeDecayPredictor::observe(const graph::Interaction& e) {
  edgebank_update(mem_, e.query());
}

std::vector<double> TimeDecayPredictor::score_edges(std::span<const EdgeQuery> batch) const {
  std::vector<double> out(batch.size(), 0.0);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto it = mem_.seen.find(batch[i].pair());
    if (it == mem_.seen.end()) continue;
    const double age = std::max(0.0, batch[i].timestamp - it->second.last_time);
    out[i] = std::exp(-age / tau_);
  }
  return out;
}

}  // namespace tgbench::baselines
