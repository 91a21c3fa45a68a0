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

#include "tgbench/train/profiler.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <numeric>

namespace tgbench::train {

std::uint64_t peak_rss_bytes() {
  struct rusage usage {};
  getrusage(RUSAGE_SELF, &usage);
#if defined(__APPLE__)
  return static_cast<std::uint64_t>(usage.ru_maxrss);
#else
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024ULL;
#endif
}

void RunProfiler::end_epoch() {
  epoch_seconds_.push_back(epoch_timer_.seconds());
  sample_memory();
}

void RunProfiler::sample_memory() { memory_samples_.push_back(peak_rss_bytes()); }

double RunProfiler::mean_seconds_per_epoch() const {
  if (epoch_seconds_.empty()) return 0.0;
  return std::accumulate(epoch_seconds_.begin(), epoch_seconds_.end(), 0.0) /
         static_cast<double>(epoch_seconds_.size());
}

std::uint64_t RunProfiler::peak_memory_bytes() const {
  if (memory_samples_.empty()) return peak_rss_bytes();
  return *std::max_element(memory_samples_.begin(), memory_samples_.end());
}

}  // namespace tgbench::train
