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

#ifndef TGBENCH_SPLIT_SPLITS_HPP_
#define TGBENCH_SPLIT_SPLITS_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tgbench/graph/temporal_graph.hpp"
#include "tgbench/kernels/kernels.hpp"

namespace tgbench::split {

// Membership: train t <= t_val, val t_val < t <= t_test, test t > t_test.
struct SplitBoundaries {
  Timestamp t_val = 0.0;
  Timestamp t_test = 0.0;
  double q_val = 0.70;
  double q_test = 0.85;
};

// Linear-interpolated quantile of an ascending sequence (position q*(n-1)).
double empirical_quantile(std::span<const double> sorted, double q);

SplitBoundaries chronological_split(const graph::TemporalGraph& graph,
                                    double q_val = 0.70, double q_test = 0.85);

struct UnseenNodeSet {
  std::vector<NodeId> nodes;  // ascending
  std::uint64_t seed = 0;
  double ratio = 0.1;
  std::size_t target_size = 0;

  bool contains(NodeId v) const;
  // Dense flag vector indexed by node id, sized max_id + 1.
  std::vector<std::uint8_t> flags(NodeId max_id) const;
};

// Draws floor(ratio * n_nodes) nodes uniformly without replacement from the
// nodes that occur in validation or test interactions (t > t_val).
UnseenNodeSet select_unseen_nodes(const graph::TemporalGraph& graph,
                                  const SplitBoundaries& bounds,
                                  double ratio, std::uint64_t seed);

// Edge-index partitions. Every list is ascending.
struct LinkPredSplits {
  std::vector<EdgeId> train;     // chronological train minus unseen-touching edges
  std::vector<EdgeId> val;
  std::vector<EdgeId> test;
  std::vector<EdgeId> ind_val;   // >= 1 unseen endpoint
  std::vector<EdgeId> ind_test;
  std::vector<EdgeId> no_val;    // exactly one unseen endpoint (New-Old)
  std::vector<EdgeId> no_test;
  std::vector<EdgeId> nn_val;    // two unseen endpoints (New-New)
  std::vector<EdgeId> nn_test;

  friend bool operator==(const LinkPredSplits&, const LinkPredSplits&) = default;
};

LinkPredSplits build_link_pred_splits(
    const graph::TemporalGraph& graph, const SplitBoundaries& bounds,
    const UnseenNodeSet& unseen,
    kernels::Backend backend = kernels::default_backend());

struct NodeClassSplits {
  std::vector<EdgeId> train;
  std::vector<EdgeId> val;
  std::vector<EdgeId> test;

  friend bool operator==(const NodeClassSplits&, const NodeClassSplits&) = default;
};

NodeClassSplits build_node_class_splits(const graph::TemporalGraph& graph,
                                        const SplitBoundaries& bounds);

// <name>.splits.json: boundaries, mask parameters, and one edge_index array
// per partition. Output is deterministic for identical inputs.
std::string link_pred_splits_json(const std::string& dataset,
                                  const SplitBoundaries& bounds,
                                  const UnseenNodeSet& unseen,
                                  const LinkPredSplits& splits);
std::string node_class_splits_json(const std::string& dataset,
                                   const SplitBoundaries& bounds,
                                   const NodeClassSplits& splits);

struct LinkPredSplitFile {
  std::string dataset;
  SplitBoundaries bounds;
  UnseenNodeSet unseen;
  LinkPredSplits splits;
};
LinkPredSplitFile parse_link_pred_splits_json(const std::string& text);

}  // namespace tgbench::split

#endif  // TGBENCH_SPLIT_SPLITS_HPP_
