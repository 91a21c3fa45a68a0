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

#ifndef TGBENCH_GRAPH_REINDEX_HPP_
#define TGBENCH_GRAPH_REINDEX_HPP_

#include <cstddef>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::graph {

enum class ReindexKind { kHeterogeneous, kHomogeneous };

std::string_view to_string(ReindexKind kind);
ReindexKind parse_reindex_kind(std::string_view s);

// Bijection between original ids and the contiguous range 1..n_nodes.
//
// Heterogeneous: users map to 1..n_users in ascending original-id order and
// items map to n_users+1..n_users+n_items, also ascending. Users and items
// are separate namespaces, so the same raw value may appear on both sides.
// Homogeneous: one namespace; ids are assigned in first-appearance order over
// the stream's src column followed by its dst column.
class NodeIndexMap {
 public:
  NodeIndexMap() = default;
  NodeIndexMap(ReindexKind kind, std::size_t n_users, std::size_t n_items,
               std::vector<NodeId> originals);

  ReindexKind kind() const { return kind_; }
  std::size_t n_users() const { return n_users_; }
  std::size_t n_items() const { return n_items_; }
  std::size_t n_nodes() const { return originals_.size(); }

  NodeId map_src(NodeId original) const;
  NodeId map_dst(NodeId original) const;

  // Original id of a contiguous id in 1..n_nodes.
  NodeId original(NodeId contiguous) const;
  bool is_user(NodeId contiguous) const;

  // originals()[k] is the original id of contiguous id k + 1.
  const std::vector<NodeId>& originals() const { return originals_; }

  // Heterogeneous maps only: raw values present both as a user and as an
  // item. They are kept as two nodes; callers decide whether that is right.
  std::size_t overlapping_ids() const { return overlapping_ids_; }

 private:
  void build_lookup();

  ReindexKind kind_ = ReindexKind::kHomogeneous;
  std::size_t n_users_ = 0;
  std::size_t n_items_ = 0;
  std::size_t overlapping_ids_ = 0;
  std::vector<NodeId> originals_;
  std::unordered_map<NodeId, NodeId> src_lookup_;
  std::unordered_map<NodeId, NodeId> dst_lookup_;
};

struct ReindexResult {
  TemporalGraph graph;
  NodeIndexMap map;
};

// Relabels endpoints; order, timestamps, labels, edge_index and edge
// features are unchanged. kHeterogeneous requires graph.bipartite().
ReindexResult reindex(const TemporalGraph& graph, ReindexKind kind);

// Inverse relabeling used to check the round trip.
TemporalGraph restore_original_ids(const TemporalGraph& graph,
                                   const NodeIndexMap& map);

}  // namespace tgbench::graph

#endif  // TGBENCH_GRAPH_REINDEX_HPP_
