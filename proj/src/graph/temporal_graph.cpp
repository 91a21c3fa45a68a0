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

#include "tgbench/graph/temporal_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "tgbench/common/error.hpp"

namespace tgbench::graph {

namespace {

std::size_t count_distinct(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(
      std::unique(ids.begin(), ids.end()) - ids.begin());
}

}  // namespace

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t dim)
    : rows_(rows), dim_(dim), values_(rows * dim, 0.0f) {}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t dim,
                             std::vector<float> values)
    : rows_(rows), dim_(dim), values_(std::move(values)) {
  if (values_.size() != rows_ * dim_) {
    fail(ErrorKind::kDimensionMismatch,
         "feature matrix holds " + std::to_string(values_.size()) +
             " values, expected " + std::to_string(rows_) + "x" +
             std::to_string(dim_));
  }
}

bool FeatureMatrix::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](float v) { return std::isfinite(v); });
}

TemporalGraph::TemporalGraph(std::vector<Interaction> interactions,
                             FeatureMatrix edge_features, bool bipartite)
    : interactions_(std::move(interactions)),
      edge_features_(std::move(edge_features)),
      bipartite_(bipartite) {
  if (edge_features_.rows() == 0 && edge_features_.dim() == 0) {
    edge_features_ = FeatureMatrix(interactions_.size(), 0);
  }
  if (edge_features_.rows() != interactions_.size()) {
    fail(ErrorKind::kDimensionMismatch,
         "edge feature rows (" + std::to_string(edge_features_.rows()) +
             ") do not match interaction count (" +
             std::to_string(interactions_.size()) + ")");
  }
  compute_counts();
}

void TemporalGraph::compute_counts() {
  std::vector<NodeId> srcs;
  std::vector<NodeId> dsts;
  srcs.reserve(interactions_.size());
  dsts.reserve(interactions_.size());
  max_node_id_ = 0;
  for (const Interaction& it : interactions_) {
    srcs.push_back(it.src);
    dsts.push_back(it.dst);
    max_node_id_ = std::max({max_node_id_, it.src, it.dst});
  }
  n_src_distinct_ = count_distinct(srcs);
  n_dst_distinct_ = count_distinct(dsts);
  if (bipartite_) {
    n_nodes_ = n_src_distinct_ + n_dst_distinct_;
  } else {
    srcs.insert(srcs.end(), dsts.begin(), dsts.end());
    n_nodes_ = count_distinct(std::move(srcs));
  }
}

TemporalGraph TemporalGraph::from_rows(std::vector<RawInteraction> rows,
                                       FeatureMatrix edge_features,
                                       bool bipartite) {
  const std::size_t n = rows.size();
  if (edge_features.rows() == 0 && edge_features.dim() == 0) {
    edge_features = FeatureMatrix(n, 0);
  }
  if (edge_features.rows() != n) {
    fail(ErrorKind::kDimensionMismatch,
         "edge feature rows do not match row count");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&rows](std::size_t a, std::size_t b) {
                     return rows[a].timestamp < rows[b].timestamp;
                   });

  std::vector<Interaction> sorted(n);
  const std::size_t dim = edge_features.dim();
  std::vector<float> feats(n * dim);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const RawInteraction& r = rows[order[pos]];
    sorted[pos] = {r.src, r.dst, r.timestamp, r.state_label, pos};
    const auto src_row = edge_features.row(order[pos]);
    std::copy(src_row.begin(), src_row.end(), feats.begin() + pos * dim);
  }
  return TemporalGraph(std::move(sorted), FeatureMatrix(n, dim, std::move(feats)),
                       bipartite);
}

TemporalGraph TemporalGraph::from_sorted(std::vector<Interaction> interactions,
                                         FeatureMatrix edge_features,
                                         bool bipartite) {
  for (std::size_t i = 0; i < interactions.size(); ++i) {
    const Interaction& it = interactions[i];
    if (it.edge_index != i) {
      fail(ErrorKind::kInvalidArgument,
           "edge_index " + std::to_string(it.edge_index) + " at position " +
               std::to_string(i) + " breaks the 0..n-1 sequence");
    }
    if (!std::isfinite(it.timestamp) || it.timestamp < 0.0) {
      fail(ErrorKind::kInvalidArgument,
           "timestamp at edge " + std::to_string(i) +
               " must be finite and non-negative");
    }
    if (i > 0 && it.timestamp < interactions[i - 1].timestamp) {
      fail(ErrorKind::kOutOfOrder,
           "interactions are not sorted by timestamp at edge " +
               std::to_string(i));
    }
  }
  return TemporalGraph(std::move(interactions), std::move(edge_features),
                       bipartite);
}

std::span<const float> TemporalGraph::edge_features(EdgeId e) const {
  return edge_features_.row(e);
}

Timestamp TemporalGraph::time_min() const {
  if (interactions_.empty()) fail(ErrorKind::kEmptyInput, "graph has no edges");
  return interactions_.front().timestamp;
}

Timestamp TemporalGraph::time_max() const {
  if (interactions_.empty()) fail(ErrorKind::kEmptyInput, "graph has no edges");
  return interactions_.back().timestamp;
}

}  // namespace tgbench::graph
