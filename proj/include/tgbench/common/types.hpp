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

#ifndef TGBENCH_COMMON_TYPES_HPP_
#define TGBENCH_COMMON_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

namespace tgbench {

using NodeId = std::int64_t;
using EdgeId = std::size_t;
using Timestamp = double;

struct NodePair {
  NodeId src = 0;
  NodeId dst = 0;

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct NodePairHash {
  std::size_t operator()(const NodePair& p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.src) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.dst) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// A (src, dst, t) query as seen by samplers and predictors.
struct EdgeQuery {
  NodeId src = 0;
  NodeId dst = 0;
  Timestamp timestamp = 0.0;

  NodePair pair() const { return {src, dst}; }
  friend bool operator==(const EdgeQuery&, const EdgeQuery&) = default;
};

}  // namespace tgbench

#endif  // TGBENCH_COMMON_TYPES_HPP_
