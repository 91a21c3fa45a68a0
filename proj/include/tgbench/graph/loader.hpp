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

#ifndef TGBENCH_GRAPH_LOADER_HPP_
#define TGBENCH_GRAPH_LOADER_HPP_

#include <filesystem>
#include <string_view>

#include "tgbench/graph/temporal_graph.hpp"

namespace tgbench::graph {

// Column positions of a comma-separated interaction file. The defaults match
// the JODIE layout: user_id,item_id,timestamp,state_label,f1,...,fk.
// A negative label column means "no labels" (all zero); a negative
// feature_begin means the file carries no edge features.
struct CsvColumns {
  int src = 0;
  int dst = 1;
  int timestamp = 2;
  int label = 3;
  int feature_begin = 4;
  bool header = true;
};

// Parses "src=1,dst=2,timestamp=3,label=4,features=5,header=1"; keys may be
// omitted. Used by the CLI's --columns flag.
CsvColumns parse_columns(std::string_view spec);

// Reads an interaction file. The result is ordered by (timestamp, row order),
// keeps the original ids, and takes d_e from the first data row.
TemporalGraph load_dataset(const std::filesystem::path& path, bool bipartite,
                           const CsvColumns& columns = {});

// Same as load_dataset over in-memory text; `source` names the input in
// error messages.
TemporalGraph parse_dataset(std::string_view text, bool bipartite,
                            const CsvColumns& columns = {},
                            std::string_view source = "<memory>");

}  // namespace tgbench::graph

#endif  // TGBENCH_GRAPH_LOADER_HPP_
