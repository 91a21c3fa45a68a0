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

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tgbench/kernels/kernels.hpp"

namespace tgbench::kernels {

bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Backend default_backend() {
  return openmp_available() ? Backend::kOpenMP : Backend::kSerial;
}

std::string_view to_string(Backend backend) {
  return backend == Backend::kOpenMP ? "openmp" : "serial";
}

namespace omp {

std::vector<std::uint64_t> histogram_counts(std::span<const graph::Interaction> edges,
                                            double lo, double width,
                                            std::size_t bins) {
  std::vector<std::uint64_t> counts(bins, 0);
  const auto n = static_cast<std::int64_t>(edges.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      ++local[bin_of(edges[i].timestamp, lo, width, bins)];
    }
#pragma omp critical(tgbench_histogram_merge)
    for (std::size_t b = 0; b < bins; ++b) counts[b] += local[b];
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
  const auto n = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
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
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const std::size_t base = static_cast<std::size_t>(i) * dim;
    double z = bias;
    for (std::size_t k = 0; k < dim; ++k) z += rows[base + k] * weights[k];
    out[i] = sigmoid(z);
  }
  return out;
}

}  // namespace omp

std::vector<std::uint64_t> histogram_counts(std::span<const graph::Interaction> edges,
                                            double lo, double width,
                                            std::size_t bins, Backend backend) {
  return backend == Backend::kOpenMP ? omp::histogram_counts(edges, lo, width, bins)
                                     : serial::histogram_counts(edges, lo, width, bins);
}

std::vector<EdgeTag> classify_edges(std::span<const graph::Interaction> edges,
                                    double t_val, double t_test,
                                    std::span<const std::uint8_t> unseen_flags,
                                    Backend backend) {
  return backend == Backend::kOpenMP
             ? omp::classify_edges(edges, t_val, t_test, unseen_flags)
             : serial::classify_edges(edges, t_val, t_test, unseen_flags);
}

std::vector<double> logistic_scores(std::span<const double> rows,
                                    std::size_t dim,
                                    std::span<const double> weights, double bias,
                                    Backend backend) {
  return backend == Backend::kOpenMP
             ? omp::logistic_scores(rows, dim, weights, bias)
             : serial::logistic_scores(rows, dim, weights, bias);
}

}  // namespace tgbench::kernels
