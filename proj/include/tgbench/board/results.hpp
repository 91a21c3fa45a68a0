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

#ifndef TGBENCH_BOARD_RESULTS_HPP_
#define TGBENCH_BOARD_RESULTS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgbench/train/pipeline.hpp"

namespace tgbench::board {

inline constexpr int kRecordSchemaVersion = 1;

struct SeedSet {
  std::uint64_t mask = 0;
  std::uint64_t val = 0;
  std::uint64_t test = 0;
  std::uint64_t init = 0;

  friend bool operator==(const SeedSet&, const SeedSet&) = default;
};

struct MetricValue {
  double mean = 0.0;
  double std = 0.0;

  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

// One line of the JSONL result store. (dataset, model, task, setting,
// sampler, seeds) identifies a record.
struct ResultRecord {
  int schema_version = kRecordSchemaVersion;
  std::string dataset;
  std::string model;
  std::string task;
  std::string setting;
  std::string sampler;
  SeedSet seeds;
  std::string metric;  // headline metric, also present in `metrics`
  double mean = 0.0;
  double std = 0.0;
  std::map<std::string, MetricValue> metrics;
  std::size_t repeats = 0;
  double epochs_used = 0.0;
  double seconds_per_epoch = 0.0;
  std::uint64_t peak_memory_bytes = 0;
  double inference_seconds_per_100k_edges = 0.0;
  std::string harness_version;
  std::string timestamp;  // UTC, ISO 8601

  bool same_identity(const ResultRecord& other) const;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// Throws kInvalidArgument for a record missing identity fields or holding
// non-finite values.
void validate(const ResultRecord& r);

std::string to_json_line(const ResultRecord& r);  // no trailing newline
ResultRecord parse_record(const std::string& line);

// Value of `metric` for this record: an entry of `metrics`, or one of
// epochs_used, seconds_per_epoch, peak_memory_bytes,
// inference_seconds_per_100k_edges.
std::optional<double> metric_value(const ResultRecord& r, const std::string& metric);

// Record of a finished run. The headline metric is auc for link prediction
// and binary node classification, accuracy for multi-class.
ResultRecord make_record(const train::RunConfig& cfg, const train::RunResult& result,
                         const std::string& harness_version, const std::string& timestamp);

std::string utc_timestamp_now();

// Every record of the store in file order; a missing store reads as empty.
std::vector<ResultRecord> read_store(const std::filesystem::path& store);

// Adds r under an exclusive advisory lock on <store>.lock. A record with the
// same identity is replaced in place (returns true, and `warning` explains);
// otherwise r is appended as one line.
bool record_result(const std::filesystem::path& store, const ResultRecord& r,
                   std::string* warning = nullptr);

}  // namespace tgbench::board

#endif  // TGBENCH_BOARD_RESULTS_HPP_
