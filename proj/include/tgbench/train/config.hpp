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

#ifndef TGBENCH_TRAIN_CONFIG_HPP_
#define TGBENCH_TRAIN_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>
#include <string_view>

#include "tgbench/baselines/predictor.hpp"
#include "tgbench/sampling/samplers.hpp"

namespace tgbench::train {

enum class Task { kLinkPrediction, kNodeClassification };
enum class Setting { kTransductive, kInductive, kNewOld, kNewNew };

std::string_view to_string(Task t);
std::string_view to_string(Setting s);
Task parse_task(std::string_view s);        // link_prediction|lp, node_classification|nc
Setting parse_setting(std::string_view s);  // transductive, inductive, new_old, new_new

struct RunConfig {
  std::string dataset;
  std::filesystem::path data_dir = ".";
  Task task = Task::kLinkPrediction;
  Setting setting = Setting::kTransductive;
  std::string model = "edgebank";
  sampling::NegativeKind sampler = sampling::NegativeKind::kRandom;
  std::uint64_t mask_seed = 0;
  std::uint64_t val_seed = 0;
  std::uint64_t test_seed = 2;
  std::uint64_t init_seed = 0;
  std::size_t batch_size = 200;
  std::size_t max_epochs = 50;
  std::size_t repeats = 3;
  double learning_rate = 1e-4;
  std::size_t patience = 3;
  double tolerance = 1e-3;
  double unseen_ratio = 0.1;
  double timeout_seconds = 48.0 * 3600.0;
  // Validation negatives are drawn from the same seed every epoch unless set.
  bool reseed_val_per_epoch = false;
  // Node classification: interactions whose label is listed here are dropped
  // from training and evaluation while exclude_background is set.
  std::vector<int> background_labels;
  bool exclude_background = true;
  baselines::ModelOptions model_options;
};

// Throws kInvalidArgument on an inconsistent config.
void validate(const RunConfig& cfg);

// Applies one key=value pair. Keys match the field names; `model.<k>` lands
// in model_options.
void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value);

// Flat key=value lines; blank lines and lines starting with '#' are ignored.
RunConfig parse_run_config(std::string_view text, RunConfig base = {});
RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {});
std::string to_config_text(const RunConfig& cfg);

}  // namespace tgbench::train

#endif  // TGBENCH_TRAIN_CONFIG_HPP_
