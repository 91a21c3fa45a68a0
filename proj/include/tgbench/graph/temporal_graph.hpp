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

#ifndef TGBENCH_GRAPH_TEMPORAL_GRAPH_HPP_
#define TGBENCH_GRAPH_TEMPORAL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tgbench/common/types.hpp"

namespace tgbench::graph {

// One event of the stream: src interacts with dst at `timestamp`. The edge
// features live in the owning graph's edge FeatureMatrix at row edge_index.
struct Interaction {
  NodeId src = 0;
  NodeId dst = 0;
  Timestamp timestamp = 0.0;
  std::int32_t state_label = 0;
  EdgeId edge_index = 0;

  EdgeQuery query() const { return {src, dst, timestamp}; }
  friend bool operator==(const Interaction&, const Interaction&) = default;
};

// Dense row-major float matrix.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t dim);
  FeatureMatrix(std::size_t rows, std::size_t dim, std::vector<float> values);

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }

  std::span<const float> row(std::size_t r) const {
    return {values_.data() + r * dim_, dim_};
  }
  std::span<float> row(std::size_t r) {
    return {values_.data() + r * dim_, dim_};
  }
  std::span<const float> values() const { return values_; }

  bool all_finite() const;

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<float> values_;
};

// An unsorted event as read from a source, before ordering is applied.
struct RawInteraction {
  NodeId src = 0;
  NodeId dst = 0;
  Timestamp timestamp = 0.0;
  std::int32_t state_label = 0;
};

// Immutable, chronologically ordered interaction stream.
//
// Invariants: interactions are sorted by (timestamp, edge_index), and
// edge_index equals the position in the stream. n_nodes() counts distinct
// endpoints: users + items for bipartite graphs (a value appearing on both
// sides counts twice), |src ∪ dst| otherwise.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Stable-sorts rows by timestamp (ties keep input order) and assigns
  // edge_index. `edge_features` rows follow their interaction through the
  // sort; an empty matrix means d_e = 0.
  static TemporalGraph from_rows(std::vector<RawInteraction> rows,
                                 FeatureMatrix edge_features, bool bipartite);

  // Adopts an already-ordered stream; validates every ordering invariant.
  static TemporalGraph from_sorted(std::vector<Interaction> interactions,
                                   FeatureMatrix edge_features,
                                   bool bipartite);

  std::span<const Interaction> interactions() const { return interactions_; }
  const Interaction& operator[](EdgeId e) const { return interactions_[e]; }
  std::size_t n_edges() const { return interactions_.size(); }
  bool empty() const { return interactions_.empty(); }

  std::size_t n_nodes() const { return n_nodes_; }
  std::size_t n_src_distinct() const { return n_src_distinct_; }
  std::size_t n_dst_distinct() const { return n_dst_distinct_; }
  bool bipartite() const { return bipartite_; }
  std::size_t edge_dim() const { return edge_features_.dim(); }

  const FeatureMatrix& edge_features() const { return edge_features_; }
  std::span<const float> edge_features(EdgeId e) const;

  Timestamp time_min() const;
  Timestamp time_max() const;

  // Largest node id in the stream (0 when empty).
  NodeId max_node_id() const { return max_node_id_; }

 private:
  TemporalGraph(std::vector<Interaction> interactions,
                FeatureMatrix edge_features, bool bipartite);
  void compute_counts();

  std::vector<Interaction> interactions_;
  FeatureMatrix edge_features_;
  bool bipartite_ = false;
  std::size_t n_nodes_ = 0;
  std::size_t n_src_distinct_ = 0;
  std::size_t n_dst_distinct_ = 0;
  NodeId max_node_id_ = 0;
};

}  // namespace tgbench::graph

#endif  // TGBENCH_GRAPH_TEMPORAL_GRAPH_HPP_
