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

#include "tgbench/graph/stats.hpp"

#include "tgbench/common/error.hpp"

namespace tgbench::graph {

DatasetStats stats(const TemporalGraph& graph) {
  if (graph.empty() || graph.n_nodes() == 0) {
    fail(ErrorKind::kEmptyInput, "average degree is undefined for an empty graph");
  }
  DatasetStats s;
  s.n_nodes = graph.n_nodes();
  s.n_edges = graph.n_edges();
  s.n_src_distinct = graph.n_src_distinct();
  s.n_dst_distinct = graph.n_dst_distinct();
  s.avg_degree = static_cast<double>(s.n_edges) / static_cast<double>(s.n_nodes);
  s.edge_density = static_cast<double>(s.n_edges) /
                   (static_cast<double>(s.n_src_distinct) *
                    static_cast<double>(s.n_dst_distinct));
  s.time_min = graph.time_min();
  s.time_max = graph.time_max();
  return s;
}

Histogram temporal_histogram(const TemporalGraph& graph, std::size_t bins,
                             kernels::Backend backend) {
  if (bins == 0) fail(ErrorKind::kInvalidArgument, "histogram needs at least one bin");
  if (graph.empty()) fail(ErrorKind::kEmptyInput, "histogram of an empty graph");
  const double lo = graph.time_min();
  const double hi = graph.time_max();
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 0.0;

  Histogram h;
  h.bin_edges.resize(bins + 1);
  const double edge_step = width > 0.0 ? width : 1.0;
  for (std::size_t b = 0; b <= bins; ++b) {
    h.bin_edges[b] = lo + edge_step * static_cast<double>(b);
  }
  if (width > 0.0) h.bin_edges[bins] = hi;
  h.counts = kernels::histogram_counts(graph.interactions(), lo, width, bins, backend);
  return h;
}

FeatureMatrix init_node_features(const TemporalGraph& graph, std::size_t dim,
                                 FeatureInit scheme) {
  if (dim == 0) fail(ErrorKind::kInvalidArgument, "node feature dimension must be positive");
  switch (scheme) {
    case FeatureInit::kZeros:
      return FeatureMatrix(graph.n_nodes() + 1, dim);
  }
  fail(ErrorKind::kInvalidArgument, "unknown feature initialization scheme");
}

}  // namespace tgbench::graph
