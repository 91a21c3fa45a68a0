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

#ifndef TGBENCH_BOARD_LEADERBOARD_HPP_
#define TGBENCH_BOARD_LEADERBOARD_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgbench/board/results.hpp"

namespace tgbench::board {

// Ranking direction of a metric. Quality metrics rank higher-is-better,
// cost metrics (runtime, memory, epochs) lower-is-better. Unknown names
// throw kInvalidArgument.
bool higher_is_better(std::string_view metric);
const std::vector<std::string>& registered_metrics();

using ValueMatrix = std::vector<std::vector<std::optional<double>>>;  // models x datasets

// Ranks within one dataset column: best = 1, tied values share the mean of
// their positions.
std::vector<double> rank_column(const std::vector<double>& values, bool higher_better);

// Mean per-model rank over the datasets. Datasets with a missing cell are
// left out; each exclusion appends a message to `warnings`. Throws
// kEmptyInput when nothing remains.
std::vector<double> compute_average_rank(const ValueMatrix& values, bool higher_better,
                                         std::vector<std::string>* warnings = nullptr);

enum class TableFormat { kMarkdown, kCsv };
TableFormat parse_table_format(std::string_view s);

struct LeaderboardQuery {
  std::string task = "link_prediction";
  std::string setting = "transductive";
  std::string metric = "auc";
  std::optional<std::string> sampler;  // any sampler when unset
  // Leave second-best unflagged when it trails the best by more than 0.05.
  bool suppress_distant_second = false;
};

struct LeaderboardTable {
  std::vector<std::string> datasets;  // rows, sorted
  std::vector<std::string> models;    // columns, sorted
  ValueMatrix values;                 // models x datasets
  ValueMatrix stds;
  std::vector<double> average_rank;   // per model
  std::vector<std::string> warnings;
};

// Selects matching records; when several share (dataset, model) the one
// latest in the store wins. Throws kEmptyInput for an empty selection.
LeaderboardTable build_leaderboard(const std::vector<ResultRecord>& records,
                                   const LeaderboardQuery& q);

// Rows = datasets, columns = models, footer = average rank. Markdown marks
// the best cell of each row in bold and the second-best underlined; csv
// appends best and second columns naming the models.
std::string render_leaderboard(const LeaderboardTable& t, const LeaderboardQuery& q,
                               TableFormat format);

std::string emit_leaderboard(const std::vector<ResultRecord>& records,
                             const LeaderboardQuery& q, TableFormat format);

}  // namespace tgbench::board

#endif  // TGBENCH_BOARD_LEADERBOARD_HPP_
