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

// Synthetic streams shared by the unit and acceptance tests.

#ifndef TGBENCH_TESTS_TEST_UTIL_HPP_
#define TGBENCH_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

#include <unistd.h>

#include "tgbench/common/rng.hpp"
#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::testing {

struct Row {
  NodeId src;
  NodeId dst;
  double t;
  int label = 0;
};

inline graph::TemporalGraph graph_of(const std::vector<Row>& rows, bool bipartite = false,
                                     std::size_t edge_dim = 0) {
  std::vector<graph::RawInteraction> raw;
  for (const Row& r : rows) raw.push_back({r.src, r.dst, r.t, r.label});
  graph::FeatureMatrix f(rows.size(), edge_dim);
  return graph::TemporalGraph::from_rows(std::move(raw), std::move(f), bipartite);
}

// Bipartite stream: users 1..n_users, items n_users+1..n_users+n_items, every
// node appears at least once (edge count permitting), timestamps strictly
// increasing so quantile splits have no ties.
inline graph::TemporalGraph covering_bipartite(std::size_t n_users, std::size_t n_items,
                                               std::size_t n_edges, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<graph::RawInteraction> raw;
  raw.reserve(n_edges);
  const std::size_t cover = std::max(n_users, n_items);
  for (std::size_t i = 0; i < n_edges; ++i) {
    NodeId u;
    NodeId v;
    if (i < cover) {
      u = static_cast<NodeId>(1 + i % n_users);
      v = static_cast<NodeId>(n_users + 1 + i % n_items);
    } else {
      u = static_cast<NodeId>(1 + rng.uniform_index(n_users));
      v = static_cast<NodeId>(n_users + 1 + rng.uniform_index(n_items));
    }
    raw.push_back({u, v, 0.0, 0});
  }
  // Shuffle so that coverage edges are spread over the whole time span.
  for (std::size_t i = raw.size(); i > 1; --i) {
    std::swap(raw[i - 1], raw[rng.uniform_index(i)]);
  }
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i].timestamp = static_cast<double>(i + 1);
  return graph::TemporalGraph::from_rows(std::move(raw), graph::FeatureMatrix(n_edges, 0),
                                         true);
}

// Homogeneous stream over ids 1..n_nodes with the same coverage rule.
inline graph::TemporalGraph covering_homogeneous(std::size_t n_nodes, std::size_t n_edges,
                                                 std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<graph::RawInteraction> raw;
  raw.reserve(n_edges);
  for (std::size_t i = 0; i < n_edges; ++i) {
    NodeId u;
    NodeId v;
    if (i < n_nodes) {
      u = static_cast<NodeId>(1 + i);
      v = static_cast<NodeId>(1 + (i + 1) % n_nodes);
    } else {
      u = static_cast<NodeId>(1 + rng.uniform_index(n_nodes));
      v = static_cast<NodeId>(1 + rng.uniform_index(n_nodes));
    }
    raw.push_back({u, v, 0.0, 0});
  }
  for (std::size_t i = raw.size(); i > 1; --i) {
    std::swap(raw[i - 1], raw[rng.uniform_index(i)]);
  }
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i].timestamp = static_cast<double>(i + 1);
  return graph::TemporalGraph::from_rows(std::move(raw), graph::FeatureMatrix(n_edges, 0),
                                         false);
}

// Random stream with repeated timestamps (ties), small node ranges.
inline graph::TemporalGraph random_stream(std::uint64_t seed, std::size_t n_edges,
                                          std::size_t n_src, std::size_t n_dst,
                                          bool bipartite, std::size_t edge_dim = 0) {
  SeededRng rng(seed);
  std::vector<graph::RawInteraction> raw;
  double t = 0.0;
  for (std::size_t i = 0; i < n_edges; ++i) {
    if (rng.uniform01() < 0.7) t += static_cast<double>(1 + rng.uniform_index(5));
    const NodeId u = static_cast<NodeId>(1 + rng.uniform_index(n_src));
    const NodeId v = bipartite ? static_cast<NodeId>(n_src + 1 + rng.uniform_index(n_dst))
                               : static_cast<NodeId>(1 + rng.uniform_index(n_dst));
    raw.push_back({u, v, t, static_cast<std::int32_t>(rng.uniform_index(2))});
  }
  std::vector<float> feats(n_edges * edge_dim);
  for (float& f : feats) f = static_cast<float>(rng.uniform01());
  return graph::TemporalGraph::from_rows(
      std::move(raw), graph::FeatureMatrix(n_edges, edge_dim, std::move(feats)), bipartite);
}

// Each user repeatedly interacts with one fixed item, so every later edge
// repeats an earlier pair; random negatives over many items are mostly new.
inline graph::TemporalGraph replay_stream(std::size_t n_users, std::size_t n_items,
                                          std::size_t rounds) {
  std::vector<graph::RawInteraction> raw;
  double t = 1.0;
  for (std::size_t r = 0; r < rounds; ++r) {
    for (std::size_t u = 1; u <= n_users; ++u) {
      const NodeId item = static_cast<NodeId>(n_users + 1 + (u * 7) % n_items);
      raw.push_back({static_cast<NodeId>(u), item, t, 0});
      t += 1.0;
    }
  }
  const std::size_t n = raw.size();
  return graph::TemporalGraph::from_rows(std::move(raw), graph::FeatureMatrix(n, 0), true);
}

// Planted recency rule: a user's next interaction is with its most recent
// partner with high probability, otherwise with a random item.
inline graph::TemporalGraph recency_stream(std::size_t n_users, std::size_t n_items,
                                           std::size_t n_edges, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<NodeId> last(n_users + 1, 0);
  std::vector<graph::RawInteraction> raw;
  for (std::size_t i = 0; i < n_edges; ++i) {
    const std::size_t u = 1 + rng.uniform_index(n_users);
    NodeId item;
    if (last[u] != 0 && rng.uniform01() < 0.9) {
      item = last[u];
    } else {
      item = static_cast<NodeId>(n_users + 1 + rng.uniform_index(n_items));
    }
    last[u] = item;
    raw.push_back({static_cast<NodeId>(u), item, static_cast<double>(i + 1), 0});
  }
  return graph::TemporalGraph::from_rows(std::move(raw), graph::FeatureMatrix(n_edges, 0),
                                         true);
}

inline std::filesystem::path temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("tgbench_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace tgbench::testing

#endif  // TGBENCH_TESTS_TEST_UTIL_HPP_
