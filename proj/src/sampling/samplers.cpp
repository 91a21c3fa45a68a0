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

#include "tgbench/sampling/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "tgbench/common/error.hpp"

namespace tgbench::sampling {

using graph::Interaction;
using graph::TemporalGraph;

std::string_view to_string(NegativeKind kind) {
  switch (kind) {
    case NegativeKind::kRandom: return "random";
    case NegativeKind::kHistorical: return "historical";
    case NegativeKind::kInductive: return "inductive";
  }
  return "random";
}

NegativeKind parse_negative_kind(std::string_view s) {
  if (s == "random" || s == "rnd") return NegativeKind::kRandom;
  if (s == "historical" || s == "hist") return NegativeKind::kHistorical;
  if (s == "inductive" || s == "ind") return NegativeKind::kInductive;
  fail(ErrorKind::kInvalidArgument, "unknown negative sampler '" + std::string(s) + "'");
}

NegativePool build_negative_pool(const TemporalGraph& graph,
                                 std::span<const EdgeId> train_edges,
                                 NegativeKind kind) {
  NegativePool pool;
  pool.kind = kind;
  const auto stream = graph.interactions();

  if (graph.bipartite()) {
    for (const Interaction& it : stream) pool.dst_pool.push_back(it.dst);
  } else {
    for (const Interaction& it : stream) {
      pool.dst_pool.push_back(it.src);
      pool.dst_pool.push_back(it.dst);
    }
  }
  std::sort(pool.dst_pool.begin(), pool.dst_pool.end());
  pool.dst_pool.erase(std::unique(pool.dst_pool.begin(), pool.dst_pool.end()),
                      pool.dst_pool.end());

  for (EdgeId e : train_edges) pool.hist_edges.push_back(stream[e].query().pair());
  std::sort(pool.hist_edges.begin(), pool.hist_edges.end());
  pool.hist_edges.erase(std::unique(pool.hist_edges.begin(), pool.hist_edges.end()),
                        pool.hist_edges.end());

  std::vector<NodePair> all;
  all.reserve(stream.size());
  for (const Interaction& it : stream) all.push_back(it.query().pair());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::set_difference(all.begin(), all.end(), pool.hist_edges.begin(),
                      pool.hist_edges.end(), std::back_inserter(pool.unseen_edges));
  return pool;
}

NegativeBatch random_negatives(std::span<const EdgeQuery> positives,
                               const NegativePool& pool, SeededRng& rng) {
  if (pool.dst_pool.empty()) {
    fail(ErrorKind::kEmptyInput, "random negative sampling needs a destination pool");
  }
  NegativeBatch out;
  out.edges.reserve(positives.size());
  for (const EdgeQuery& p : positives) {
    const NodeId dst = pool.dst_pool[rng.uniform_index(pool.dst_pool.size())];
    out.edges.push_back({p.src, dst, p.timestamp});
  }
  return out;
}

namespace {

NegativeBatch pair_negatives(std::span<const EdgeQuery> positives,
                             std::span<const NodePair> candidates,
                             const NegativePool& pool, SeededRng& rng) {
  NegativeBatch out;
  out.edges.reserve(positives.size());
  if (candidates.empty()) {
    out = random_negatives(positives, pool, rng);
    out.fallbacks = positives.size();
    return out;
  }
  std::unordered_set<NodePair, NodePairHash> batch_pairs;
  batch_pairs.reserve(positives.size() * 2);
  for (const EdgeQuery& p : positives) batch_pairs.insert(p.pair());

  for (const EdgeQuery& p : positives) {
    bool found = false;
    for (int attempt = 0; attempt <= kMaxCollisionRetries; ++attempt) {
      const NodePair c = candidates[rng.uniform_index(candidates.size())];
      if (batch_pairs.count(c) == 0) {
        out.edges.push_back({c.src, c.dst, p.timestamp});
        found = true;
        break;
      }
    }
    if (!found) {
      const std::span<const EdgeQuery> one(&p, 1);
      out.edges.push_back(random_negatives(one, pool, rng).edges.front());
      ++out.fallbacks;
    }
  }
  return out;
}

}  // namespace

NegativeBatch historical_negatives(std::span<const EdgeQuery> positives,
                                   const NegativePool& pool, SeededRng& rng) {
  return pair_negatives(positives, pool.hist_edges, pool, rng);
}

NegativeBatch inductive_negatives(std::span<const EdgeQuery> positives,
                                  const NegativePool& pool, SeededRng& rng) {
  return pair_negatives(positives, pool.unseen_edges, pool, rng);
}

NegativeBatch sample_negatives(std::span<const EdgeQuery> positives,
                               const NegativePool& pool, SeededRng& rng) {
  switch (pool.kind) {
    case NegativeKind::kHistorical: return historical_negatives(positives, pool, rng);
    case NegativeKind::kInductive: return inductive_negatives(positives, pool, rng);
    case NegativeKind::kRandom: break;
  }
  return random_negatives(positives, pool, rng);
}

double overflow_safe_weight(double delta) {
  if (delta > 0.0) return delta;
  if (delta == 0.0) return 1.0;
  return -1.0 / delta;
}

std::vector<double> neighbor_weights(std::span<const double> deltas,
                                     const NeighborWeightConfig& cfg) {
  if (deltas.empty()) fail(ErrorKind::kEmptyInput, "neighbor weights need at least one neighbor");
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) {
    fail(ErrorKind::kInvalidArgument, "temporal bias alpha must be positive");
  }
  std::vector<double> w(deltas.size());
  if (cfg.mode == WeightMode::kExponential) {
    const double max_exponent = std::log(std::numeric_limits<double>::max());
    const double min_exponent = std::log(std::numeric_limits<double>::min());
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      const double x = cfg.alpha * deltas[k];
      if (!std::isfinite(x) || x > max_exponent || x < min_exponent) {
        fail(ErrorKind::kOverflow,
             "exp(alpha * delta) is out of range for delta " + std::to_string(deltas[k]) +
                 "; use the overflow-safe weighting");
      }
      w[k] = std::exp(x);
    }
  } else {
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      if (!std::isfinite(deltas[k])) {
        fail(ErrorKind::kNonFinite, "neighbor time delta must be finite");
      }
      w[k] = cfg.alpha * overflow_safe_weight(deltas[k]);
    }
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!std::isfinite(total)) {
    fail(ErrorKind::kOverflow, "neighbor weight total overflows; use the overflow-safe weighting");
  }
  for (double& x : w) x /= total;
  return w;
}

double temporal_density(std::size_t n_e, std::size_t n_u, std::size_t n_i) {
  if (n_u == 0 || n_i == 0) fail(ErrorKind::kEmptyInput, "density of an empty subgraph");
  return static_cast<double>(n_e) /
         (static_cast<double>(n_u) * static_cast<double>(n_i));
}

SubgraphSample random_subgraph(const TemporalGraph& graph, std::size_t n_e,
                               SeededRng& rng) {
  if (n_e == 0) fail(ErrorKind::kInvalidArgument, "subgraph needs at least one edge");
  if (n_e > graph.n_edges()) {
    fail(ErrorKind::kInvalidArgument,
         "requested " + std::to_string(n_e) + " edges from a graph with " +
             std::to_string(graph.n_edges()));
  }
  std::vector<EdgeId> ids(graph.n_edges());
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  for (std::size_t i = 0; i < n_e; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(ids.size() - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(n_e);
  std::sort(ids.begin(), ids.end());

  std::vector<NodeId> srcs;
  std::vector<NodeId> dsts;
  srcs.reserve(n_e);
  dsts.reserve(n_e);
  for (EdgeId e : ids) {
    srcs.push_back(graph[e].src);
    dsts.push_back(graph[e].dst);
  }
  std::sort(srcs.begin(), srcs.end());
  std::sort(dsts.begin(), dsts.end());

  SubgraphSample s;
  s.n_e = n_e;
  s.n_u = static_cast<std::size_t>(std::unique(srcs.begin(), srcs.end()) - srcs.begin());
  s.n_i = static_cast<std::size_t>(std::unique(dsts.begin(), dsts.end()) - dsts.begin());
  s.sigma = temporal_density(s.n_e, s.n_u, s.n_i);
  s.edge_indices = std::move(ids);
  return s;
}

}  // namespace tgbench::sampling
