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

// Processed dataset bundle on disk:
//
//   <name>.edges.csv      src,dst,timestamp,label,edge_index
//   <name>.edgefeat.f32   edge feature matrix
//   <name>.nodefeat.f32   node feature matrix (row 0 = padding)
//   <name>.nodemap.csv    contiguous_id,side,original_id
//   <name>.meta.json      counts, d_e, bipartite flag, node map reference
//
// A .f32 file is an 8-byte header (rows, cols as little-endian uint32)
// followed by rows * cols little-endian IEEE-754 binary32 values, row-major.

#ifndef TGBENCH_GRAPH_BUNDLE_HPP_
#define TGBENCH_GRAPH_BUNDLE_HPP_

#include <filesystem>
#include <string>

#include "tgbench/graph/reindex.hpp"
#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::graph {

struct Bundle {
  std::string name;
  TemporalGraph graph;
  NodeIndexMap map;
  FeatureMatrix node_features;
};

void write_f32_matrix(const std::filesystem::path& path, const FeatureMatrix& m);
FeatureMatrix read_f32_matrix(const std::filesystem::path& path);

void write_bundle(const std::filesystem::path& dir, const Bundle& bundle);
Bundle read_bundle(const std::filesystem::path& dir, const std::string& name);

// Path of one bundle member, e.g. bundle_path(dir, "wikipedia", ".meta.json").
std::filesystem::path bundle_path(const std::filesystem::path& dir,
                                  const std::string& name,
                                  const std::string& suffix);

}  // namespace tgbench::graph

#endif  // TGBENCH_GRAPH_BUNDLE_HPP_
