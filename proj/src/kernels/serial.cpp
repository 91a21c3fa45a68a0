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

#include "tgbench/kernels/kernels.hpp"

namespace tgbench::kernels::serial {

std::vector<std::uint64_t> histogram_counts(std::span<const graph::Interaction> edges,
                                            double lo, double width,
                                            std::size_t bins) {
  std::vector<std::uint64_t> counts(bins, 0);
  for (const graph::Interaction& e : edges) {
    ++counts[bin_of(e.timestamp, lo, width, bins)];
  }
  return counts;
}

std::vector<EdgeTag> classify_edges(std::span<const graph::Interaction> edges,
                                    double t_val, double t_test,
                                    std::span<const std::uint8_t> unseen_flags) {
  const auto flagged = [&](NodeId v) -> std::uint8_t {
    const auto idx = static_cast<std::size_t>(v);
    return v >= 0 && idx < unseen_flags.size() && unseen_flags[idx] != 0 ? 1 : 0;
  };
  std::vector<EdgeTag> tags(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const graph::Interaction& e = edges[i];
    EdgeTag tag;
    tag.span = e.timestamp <= t_val ? 0 : (e.timestamp <= t_test ? 1 : 2);
    tag.unseen = static_cast<std::uint8_t>(flagged(e.src) + flagged(e.dst));
    tags[i] = tag;
  }
  return tags;
}

std::vector<double> logistic_scores(std::span<const double> rows,
                                    std::size_t dim,
                                    std::span<const double> weights,
                                    double bias) {
  const std::size_t n = dim == 0 ? 0 : rows.size() / dim;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double z = bias;
    for (std::size_t k = 0; k < dim; ++k) z += rows[i * dim + k] * weights[k];
    out[i] = sigmoid(z);
  }
  return out;
}

}  // namespace tgbench::kernels::serial
