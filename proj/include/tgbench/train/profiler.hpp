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

#ifndef TGBENCH_TRAIN_PROFILER_HPP_
#define TGBENCH_TRAIN_PROFILER_HPP_

#include <chrono>
#include <cstdint>
#include <vector>

namespace tgbench::train {

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}

  void reset() { start_ = std::chrono::steady_clock::now(); }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Peak resident set size of this process in bytes (CPU RAM only).
std::uint64_t peak_rss_bytes();

// Wall-clock and peak-RSS samples of one run.
class RunProfiler {
 public:
  void begin_epoch() { epoch_timer_.reset(); }
  void end_epoch();
  void sample_memory();

  double mean_seconds_per_epoch() const;
  std::uint64_t peak_memory_bytes() const;
  const std::vector<double>& epoch_seconds() const { return epoch_seconds_; }
  const std::vector<std::uint64_t>& memory_samples() const { return memory_samples_; }

 private:
  WallTimer epoch_timer_;
  std::vector<double> epoch_seconds_;
  std::vector<std::uint64_t> memory_samples_;
};

}  // namespace tgbench::train

#endif  // TGBENCH_TRAIN_PROFILER_HPP_
