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

#include "tgbench/board/results.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "tgbench/common/error.hpp"

namespace tgbench::board {

using nlohmann::json;

bool ResultRecord::same_identity(const ResultRecord& o) const {
  return dataset == o.dataset && model == o.model && task == o.task &&
         setting == o.setting && sampler == o.sampler && seeds == o.seeds;
}

void validate(const ResultRecord& r) {
  const auto bad = [](const std::string& msg) { fail(ErrorKind::kInvalidArgument, msg); };
  if (r.dataset.empty() || r.model.empty() || r.task.empty() || r.setting.empty() ||
      r.sampler.empty()) {
    bad("result record is missing an identity field");
  }
  if (r.metric.empty()) bad("result record has no metric name");
  if (!std::isfinite(r.mean) || !std::isfinite(r.std) || r.std < 0.0) {
    bad("result record has a non-finite mean or invalid std");
  }
  for (const auto& [name, v] : r.metrics) {
    if (!std::isfinite(v.mean) || !std::isfinite(v.std)) {
      bad("metric " + name + " is not finite");
    }
  }
}

std::string to_json_line(const ResultRecord& r) {
  json m = json::object();
  for (const auto& [name, v] : r.metrics) m[name] = {{"mean", v.mean}, {"std", v.std}};
  const json j = {
      {"schema_version", r.schema_version},
      {"dataset", r.dataset},
      {"model", r.model},
      {"task", r.task},
      {"setting", r.setting},
      {"sampler", r.sampler},
      {"seeds", {{"mask", r.seeds.mask}, {"val", r.seeds.val}, {"test", r.seeds.test},
                 {"init", r.seeds.init}}},
      {"metric", r.metric},
      {"mean", r.mean},
      {"std", r.std},
      {"metrics", m},
      {"repeats", r.repeats},
      {"epochs_used", r.epochs_used},
      {"seconds_per_epoch", r.seconds_per_epoch},
      {"peak_memory_bytes", r.peak_memory_bytes},
      {"inference_seconds_per_100k_edges", r.inference_seconds_per_100k_edges},
      {"harness_version", r.harness_version},
      {"timestamp", r.timestamp},
  };
  return j.dump();
}

ResultRecord parse_record(const std::string& line) {
  ResultRecord r;
  try {
    const json j = json::parse(line);
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kRecordSchemaVersion) {
      fail(ErrorKind::kParse,
           "unsupported record schema_version " + std::to_string(r.schema_version));
    }
    r.dataset = j.at("dataset").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.task = j.at("task").get<std::string>();
    r.setting = j.at("setting").get<std::string>();
    r.sampler = j.at("sampler").get<std::string>();
    const json& s = j.at("seeds");
    r.seeds = {s.at("mask").get<std::uint64_t>(), s.at("val").get<std::uint64_t>(),
               s.at("test").get<std::uint64_t>(), s.at("init").get<std::uint64_t>()};
    r.metric = j.at("metric").get<std::string>();
    r.mean = j.at("mean").get<double>();
    r.std = j.at("std").get<double>();
    for (const auto& [name, v] : j.at("metrics").items()) {
      r.metrics[name] = {v.at("mean").get<double>(), v.at("std").get<double>()};
    }
    r.repeats = j.at("repeats").get<std::size_t>();
    r.epochs_used = j.at("epochs_used").get<double>();
    r.seconds_per_epoch = j.at("seconds_per_epoch").get<double>();
    r.peak_memory_bytes = j.at("peak_memory_bytes").get<std::uint64_t>();
    r.inference_seconds_per_100k_edges =
        j.at("inference_seconds_per_100k_edges").get<double>();
    r.harness_version = j.at("harness_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("bad result record: ") + e.what());
  }
  return r;
}

std::optional<double> metric_value(const ResultRecord& r, const std::string& metric) {
  if (const auto it = r.metrics.find(metric); it != r.metrics.end()) return it->second.mean;
  if (metric == r.metric) return r.mean;
  if (metric == "epochs_used") return r.epochs_used;
  if (metric == "seconds_per_epoch") return r.seconds_per_epoch;
  if (metric == "peak_memory_bytes") return static_cast<double>(r.peak_memory_bytes);
  if (metric == "inference_seconds_per_100k_edges") {
    return r.inference_seconds_per_100k_edges;
  }
  return std::nullopt;
}

ResultRecord make_record(const train::RunConfig& cfg, const train::RunResult& result,
                         const std::string& harness_version, const std::string& timestamp) {
  ResultRecord r;
  r.dataset = cfg.dataset;
  r.task = std::string(train::to_string(cfg.task));
  r.setting = std::string(train::to_string(cfg.setting));
  r.seeds = {cfg.mask_seed, cfg.val_seed, cfg.test_seed, cfg.init_seed};
  std::string split;
  if (cfg.task == train::Task::kLinkPrediction) {
    r.model = cfg.model;
    r.sampler = std::string(sampling::to_string(cfg.sampler));
    r.metric = "auc";
    split = r.setting;
  } else {
    r.model = "node-head";
    r.sampler = "none";
    r.metric = result.find("test", "auc") ? "auc" : "accuracy";
    split = "test";
  }
  const auto it = result.metrics.find(split);
  if (it == result.metrics.end()) {
    fail(ErrorKind::kEmptyInput, "run produced no metrics for " + split);
  }
  for (const auto& [name, v] : it->second) r.metrics[name] = {v.mean, v.std};
  const MetricValue& head = r.metrics.at(r.metric);
  r.mean = head.mean;
  r.std = head.std;
  r.repeats = cfg.repeats;
  r.epochs_used = result.epochs_used;
  r.seconds_per_epoch = result.seconds_per_epoch;
  r.peak_memory_bytes = result.peak_memory_bytes;
  r.inference_seconds_per_100k_edges = result.inference_seconds_per_100k_edges;
  r.harness_version = harness_version;
  r.timestamp = timestamp;
  return r;
}

std::string utc_timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<ResultRecord> read_store(const std::filesystem::path& store) {
  std::vector<ResultRecord> out;
  std::ifstream in(store);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const Error& e) {
      fail(ErrorKind::kParse, store.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

namespace {

class StoreLock {
 public:
  explicit StoreLock(const std::filesystem::path& store) {
    const std::string path = store.string() + ".lock";
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) fail(ErrorKind::kIo, "cannot open lock file " + path);
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      fail(ErrorKind::kIo, "cannot lock " + path);
    }
  }
  ~StoreLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  StoreLock(const StoreLock&) = delete;
  StoreLock& operator=(const StoreLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

bool record_result(const std::filesystem::path& store, const ResultRecord& r,
                   std::string* warning) {
  validate(r);
  if (store.has_parent_path()) std::filesystem::create_directories(store.parent_path());
  const StoreLock lock(store);
  std::vector<ResultRecord> records = read_store(store);
  for (ResultRecord& existing : records) {
    if (!existing.same_identity(r)) continue;
    existing = r;
    const std::filesystem::path tmp = store.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) fail(ErrorKind::kIo, "cannot write " + tmp.string());
      for (const ResultRecord& rec : records) out << to_json_line(rec) << '\n';
      if (!out) fail(ErrorKind::kIo, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, store);
    if (warning) {
      *warning = "replaced existing record for " + r.dataset + "/" + r.model + "/" + r.task +
                 "/" + r.setting + "/" + r.sampler;
    }
    return true;
  }
  std::ofstream out(store, std::ios::app);
  if (!out) fail(ErrorKind::kIo, "cannot append to " + store.string());
  out << to_json_line(r) << '\n';
  if (!out) fail(ErrorKind::kIo, "write failed for " + store.string());
  return false;
}

}  // namespace tgbench::board
