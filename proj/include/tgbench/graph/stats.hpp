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

#ifndef TGBENCH_GRAPH_STATS_HPP_
#define TGBENCH_GRAPH_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tgbench/graph/temporal_graph.hpp"
#include "tgbench/kernels/kernels.hpp"

namespace tgbench::graph {

struct DatasetStats {
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  std::size_t n_src_distinct = 0;
  std::size_t n_dst_distinct = 0;
  double avg_degree = 0.0;    // n_edges / n_nodes
  double edge_density = 0.0;  // n_edges / (n_src_distinct * n_dst_distinct)
  Timestamp time_min = 0.0;
  Timestamp time_max = 0.0;
};

// Throws kEmptyInput for a graph without edges (average degree undefined).
DatasetStats stats(const TemporalGraph& graph);

struct Histogram {
  std::vector<double> bin_edges;      // k + 1 values
  std::vector<std::uint64_t> counts;  // k values
};

// Equal-width bins over [time_min, time_max]; the last bin is right-closed.
// A zero-width range gives unit-width bins starting at time_min with all the
// mass in bin 0.
Histogram temporal_histogram(
    const TemporalGraph& graph, std::size_t bins,
    kernels::Backend backend = kernels::default_backend());

enum class FeatureInit { kZeros };

// (n_nodes + 1) x dim node feature matrix; row 0 is padding so that ids
// starting at 1 index rows directly.
FeatureMatrix init_node_features(const TemporalGraph& graph,
                                 std::size_t dim = 172,
                                 FeatureInit scheme = FeatureInit::kZeros);

}  // namespace tgbench::graph

#endif  // TGBENCH_GRAPH_STATS_HPP_
