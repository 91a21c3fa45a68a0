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

#ifndef TGBENCH_SAMPLING_SAMPLERS_HPP_
#define TGBENCH_SAMPLING_SAMPLERS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tgbench/common/rng.hpp"
#include "tgbench/common/types.hpp"
#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::sampling {

enum class NegativeKind { kRandom, kHistorical, kInductive };

std::string_view to_string(NegativeKind kind);
NegativeKind parse_negative_kind(std::string_view s);

// Candidate sets for negative edges. dst_pool holds item ids for bipartite
// graphs and every node id otherwise. hist_edges are the distinct pairs of
// the training edges; unseen_edges are the distinct pairs of the whole stream
// that never occur in training. All three lists are ascending.
struct NegativePool {
  NegativeKind kind = NegativeKind::kRandom;
  std::vector<NodeId> dst_pool;
  std::vector<NodePair> hist_edges;
  std::vector<NodePair> unseen_edges;
};

NegativePool build_negative_pool(const graph::TemporalGraph& graph,
                                 std::span<const EdgeId> train_edges,
                                 NegativeKind kind);

// Negatives aligned one-to-one with the positives. `fallbacks` counts the
// positions where a historical/inductive draw gave up and used the random
// sampler instead.
struct NegativeBatch {
  std::vector<EdgeQuery> edges;
  std::size_t fallbacks = 0;
};

// Redraws allowed before a historical/inductive draw falls back to random.
inline constexpr int kMaxCollisionRetries = 20;

// Same src and t as each positive; dst uniform over dst_pool. True edges are
// not rejected.
NegativeBatch random_negatives(std::span<const EdgeQuery> positives,
                               const NegativePool& pool, SeededRng& rng);

// Pairs drawn uniformly from hist_edges, redrawn while they match a positive
// pair of the batch.
NegativeBatch historical_negatives(std::span<const EdgeQuery> positives,
                                   const NegativePool& pool, SeededRng& rng);

// As historical_negatives, drawing from unseen_edges.
NegativeBatch inductive_negatives(std::span<const EdgeQuery> positives,
                                  const NegativePool& pool, SeededRng& rng);

// Dispatches on pool.kind.
NegativeBatch sample_negatives(std::span<const EdgeQuery> positives,
                               const NegativePool& pool, SeededRng& rng);

enum class WeightMode { kExponential, kOverflowSafe };

struct NeighborWeightConfig {
  double alpha = 1.0;  // temporal bias, must be positive
  WeightMode mode = WeightMode::kOverflowSafe;
};

// Unnormalized overflow-safe weight: delta for delta > 0, 1 for delta == 0,
// -1/delta for delta < 0.
double overflow_safe_weight(double delta);

// Sampling distribution over neighbors given deltas t' - t. Exponential mode
// normalizes exp(alpha * delta) and throws kOverflow when an exponent leaves
// the representable range; overflow-safe mode normalizes alpha * W(delta).
std::vector<double> neighbor_weights(std::span<const double> deltas,
                                     const NeighborWeightConfig& cfg);

struct SubgraphSample {
  std::vector<EdgeId> edge_indices;  // ascending
  std::size_t n_e = 0;
  std::size_t n_u = 0;  // distinct sources
  std::size_t n_i = 0;  // distinct destinations
  double sigma = 0.0;   // n_e / (n_u * n_i)
};

double temporal_density(std::size_t n_e, std::size_t n_u, std::size_t n_i);

// n_e edges uniformly without replacement.
SubgraphSample random_subgraph(const graph::TemporalGraph& graph,
                               std::size_t n_e, SeededRng& rng);

}  // namespace tgbench::sampling

#endif  // TGBENCH_SAMPLING_SAMPLERS_HPP_
