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

// Data-parallel inner loops of the harness. Every kernel has a plain serial
// reference and an OpenMP variant; both produce bit-identical output for any
// thread count (per-element work or integer reductions only), which the unit
// tests check and bench/ times.

#ifndef TGBENCH_KERNELS_KERNELS_HPP_
#define TGBENCH_KERNELS_KERNELS_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::kernels {

enum class Backend { kSerial, kOpenMP };

// kOpenMP when the library was built with OpenMP, kSerial otherwise.
Backend default_backend();
bool openmp_available();
int max_threads();
std::string_view to_string(Backend backend);

// Equal-width bin of t over [lo, lo + width * bins) with edges lo + width * k;
// the last bin is closed on the right, and width <= 0 sends everything to bin 0.
inline std::size_t bin_of(double t, double lo, double width, std::size_t bins) {
  if (!(width > 0.0)) return 0;
  const double pos = (t - lo) / width;
  if (!(pos > 0.0)) return 0;
  auto b = static_cast<std::size_t>(pos);
  if (b >= bins) b = bins - 1;
  // The division can land one bin off near an edge; settle against the
  // edges lo + width * k themselves.
  if (b > 0 && t < lo + width * static_cast<double>(b)) --b;
  if (b + 1 < bins && t >= lo + width * static_cast<double>(b + 1)) ++b;
  return b;
}

// Overflow-free logistic function.
inline double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Per-edge partition tag produced by classify_edges.
struct EdgeTag {
  std::uint8_t span = 0;     // 0 train, 1 val, 2 test
  std::uint8_t unseen = 0;   // endpoints in the unseen set (0, 1 or 2)
  friend bool operator==(const EdgeTag&, const EdgeTag&) = default;
};

namespace serial {

std::vector<std::uint64_t> histogram_counts(std::span<const graph::Interaction> edges,
                                            double lo, double width,
                                            std::size_t bins);

// unseen_flags is indexed by node id; ids beyond its size count as seen.
std::vector<EdgeTag> classify_edges(std::span<const graph::Interaction> edges,
                                    double t_val, double t_test,
                                    std::span<const std::uint8_t> unseen_flags);

// sigmoid(x_i . w + b) for each row of a row-major n x d matrix.
std::vector<double> logistic_scores(std::span<const double> rows,
                                    std::size_t dim,
                                    std::span<const double> weights,
                                    double bias);

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> histogram_counts(std::span<const graph::Interaction> edges,
                                            double lo, double width,
                                            std::size_t bins);
std::vector<EdgeTag> classify_edges(std::span<const graph::Interaction> edges,
                                    double t_val, double t_test,
                                    std::span<const std::uint8_t> unseen_flags);
std::vector<double> logistic_scores(std::span<const double> rows,
                                    std::size_t dim,
                                    std::span<const double> weights,
                                    double bias);

}  // namespace omp

std::vector<std::uint64_t> histogram_counts(std::span<const graph::Interaction> edges,
                                            double lo, double width,
                                            std::size_t bins,
                                            Backend backend = default_backend());
std::vector<EdgeTag> classify_edges(std::span<const graph::Interaction> edges,
                                    double t_val, double t_test,
                                    std::span<const std::uint8_t> unseen_flags,
                                    Backend backend = default_backend());
std::vector<double> logistic_scores(std::span<const double> rows,
                                    std::size_t dim,
                                    std::span<const double> weights, double bias,
                                    Backend backend = default_backend());

}  // namespace tgbench::kernels

#endif  // TGBENCH_KERNELS_KERNELS_HPP_
