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

#ifndef TGBENCH_TRAIN_PIPELINE_HPP_
#define TGBENCH_TRAIN_PIPELINE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgbench/graph/temporal_graph.hpp"
#include "tgbench/train/config.hpp"

namespace tgbench::train {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation over repeats
  std::size_t n = 0;
};

// Aggregated outcome of cfg.repeats runs.
//
// metrics[split][metric]. Link prediction splits are val, transductive,
// inductive, new_old and new_new with metrics auc and ap; node
// classification uses val and test with auc (binary labels) or accuracy and
// weighted_precision/recall/f1 (multi-class). A split whose edge set is empty
// is left out.
struct RunResult {
  std::map<std::string, std::map<std::string, MeanStd>> metrics;
  std::vector<std::size_t> epochs_per_repeat;
  double epochs_used = 0.0;  // mean over repeats
  double seconds_per_epoch = 0.0;
  std::uint64_t peak_memory_bytes = 0;  // process peak RSS, CPU only
  double inference_seconds_per_100k_edges = 0.0;
  std::size_t negative_fallbacks = 0;
  std::size_t unseen_nodes = 0;

  std::optional<MeanStd> find(const std::string& split, const std::string& metric) const;
};

// Mean and population std; an empty input gives n = 0.
MeanStd aggregate(const std::vector<double>& values);

RunResult run_link_prediction(const graph::TemporalGraph& graph, const RunConfig& cfg);
RunResult run_node_classification(const graph::TemporalGraph& graph, const RunConfig& cfg);

// Loads the bundle cfg.dataset from cfg.data_dir and dispatches on cfg.task.
RunResult run(const RunConfig& cfg);

// Metric block as JSON with sorted keys; identical runs give identical text.
std::string metrics_json(const RunResult& r);

}  // namespace tgbench::train

#endif  // TGBENCH_TRAIN_PIPELINE_HPP_
