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

#include "tgbench/board/leaderboard.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tgbench/common/error.hpp"
#include "tgbench/common/format.hpp"

namespace tgbench::board {

namespace {

struct MetricInfo {
  const char* name;
  bool higher_better;
};

constexpr MetricInfo kMetrics[] = {
    {"auc", true},
    {"ap", true},
    {"accuracy", true},
    {"weighted_precision", true},
    {"weighted_recall", true},
    {"weighted_f1", true},
    {"epochs_used", false},
    {"seconds_per_epoch", false},
    {"peak_memory_bytes", false},
    {"inference_seconds_per_100k_edges", false},
};

constexpr double kSecondBestGap = 0.05;

}  // namespace

bool higher_is_better(std::string_view metric) {
  for (const MetricInfo& m : kMetrics) {
    if (metric == m.name) return m.higher_better;
  }
  fail(ErrorKind::kInvalidArgument, "unknown metric '" + std::string(metric) + "'");
}

const std::vector<std::string>& registered_metrics() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const MetricInfo& m : kMetrics) v.emplace_back(m.name);
    return v;
  }();
  return names;
}

std::vector<double> rank_column(const std::vector<double>& values, bool higher_better) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher_better ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share the mean of i+1..j+1.
    const double rank = static_cast<double>(i + j + 2) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::vector<double> compute_average_rank(const ValueMatrix& values, bool higher_better,
                                         std::vector<std::string>* warnings) {
  if (values.empty() || values.front().empty()) {
    fail(ErrorKind::kEmptyInput, "average rank of an empty matrix");
  }
  const std::size_t n_models = values.size();
  const std::size_t n_datasets = values.front().size();
  for (const auto& row : values) {
    if (row.size() != n_datasets) {
      fail(ErrorKind::kDimensionMismatch, "ragged model x dataset matrix");
    }
  }
  std::vector<double> sum(n_models, 0.0);
  std::size_t used = 0;
  for (std::size_t d = 0; d < n_datasets; ++d) {
    std::vector<double> column;
    for (std::size_t m = 0; m < n_models; ++m) {
      if (!values[m][d]) break;
      column.push_back(*values[m][d]);
    }
    if (column.size() != n_models) {
      if (warnings) {
        warnings->push_back("dataset column " + std::to_string(d) +
                            " has missing values and is excluded from the average rank");
      }
      continue;
    }
    const std::vector<double> r = rank_column(column, higher_better);
    for (std::size_t m = 0; m < n_models; ++m) sum[m] += r[m];
    ++used;
  }
  if (used == 0) fail(ErrorKind::kEmptyInput, "no dataset has values for every model");
  for (double& s : sum) s /= static_cast<double>(used);
  return sum;
}

TableFormat parse_table_format(std::string_view s) {
  if (s == "markdown" || s == "md") return TableFormat::kMarkdown;
  if (s == "csv") return TableFormat::kCsv;
  fail(ErrorKind::kInvalidArgument, "unknown table format '" + std::string(s) + "'");
}

LeaderboardTable build_leaderboard(const std::vector<ResultRecord>& records,
                                   const LeaderboardQuery& q) {
  const bool higher = higher_is_better(q.metric);
  std::map<std::pair<std::string, std::string>, const ResultRecord*> chosen;
  std::set<std::string> datasets;
  std::set<std::string> models;
  std::vector<std::string> superseded;
  for (const ResultRecord& r : records) {
    if (r.task != q.task || r.setting != q.setting) continue;
    if (q.sampler && r.sampler != *q.sampler) continue;
    if (!metric_value(r, q.metric)) continue;
    auto& slot = chosen[{r.dataset, r.model}];
    if (slot != nullptr) {
      superseded.push_back("several records for dataset " + r.dataset + " model " + r.model +
                           "; using the latest");
    }
    slot = &r;
    datasets.insert(r.dataset);
    models.insert(r.model);
  }
  if (chosen.empty()) {
    fail(ErrorKind::kEmptyInput, "no records for task=" + q.task + " setting=" + q.setting +
                                     " metric=" + q.metric);
  }
  LeaderboardTable t;
  t.warnings = std::move(superseded);
  t.datasets.assign(datasets.begin(), datasets.end());
  t.models.assign(models.begin(), models.end());
  t.values.assign(t.models.size(), std::vector<std::optional<double>>(t.datasets.size()));
  t.stds = t.values;
  for (std::size_t m = 0; m < t.models.size(); ++m) {
    for (std::size_t d = 0; d < t.datasets.size(); ++d) {
      const auto it = chosen.find({t.datasets[d], t.models[m]});
      if (it == chosen.end()) continue;
      const ResultRecord& r = *it->second;
      t.values[m][d] = metric_value(r, q.metric);
      const auto mv = r.metrics.find(q.metric);
      t.stds[m][d] = mv != r.metrics.end() ? mv->second.std : 0.0;
    }
  }
  try {
    t.average_rank = compute_average_rank(t.values, higher);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kEmptyInput) throw;
    t.warnings.push_back("average rank unavailable: no dataset covers every model");
  }
  for (std::size_t d = 0; d < t.datasets.size(); ++d) {
    for (std::size_t m = 0; m < t.models.size(); ++m) {
      if (!t.values[m][d]) {
        t.warnings.push_back("dataset " + t.datasets[d] +
                             " lacks some models and is excluded from the average rank");
        break;
      }
    }
  }
  return t;
}

namespace {

// 0 = plain, 1 = best, 2 = second best, per model, for one dataset row.
std::vector<int> row_flags(const LeaderboardTable& t, std::size_t d, bool higher,
                           bool suppress) {
  std::vector<double> present;
  for (const auto& row : t.values) {
    if (row[d]) present.push_back(*row[d]);
  }
  std::vector<int> flags(t.models.size(), 0);
  if (present.empty()) return flags;
  std::sort(present.begin(), present.end());
  if (higher) std::reverse(present.begin(), present.end());
  const double best = present.front();
  const auto next = std::find_if(present.begin(), present.end(),
                                 [&](double v) { return v != best; });
  bool has_second = next != present.end();
  const double second = has_second ? *next : best;
  if (has_second && suppress && std::fabs(best - second) > kSecondBestGap) has_second = false;
  for (std::size_t m = 0; m < t.models.size(); ++m) {
    if (!t.values[m][d]) continue;
    if (*t.values[m][d] == best) {
      flags[m] = 1;
    } else if (has_second && *t.values[m][d] == second) {
      flags[m] = 2;
    }
  }
  return flags;
}

}  // namespace

std::string render_leaderboard(const LeaderboardTable& t, const LeaderboardQuery& q,
                               TableFormat format) {
  const bool higher = higher_is_better(q.metric);
  std::ostringstream out;
  if (format == TableFormat::kCsv) {
    out << "dataset";
    for (const auto& m : t.models) out << ',' << m;
    out << ",best,second\n";
    for (std::size_t d = 0; d < t.datasets.size(); ++d) {
      const std::vector<int> flags = row_flags(t, d, higher, q.suppress_distant_second);
      out << t.datasets[d];
      for (std::size_t m = 0; m < t.models.size(); ++m) {
        out << ',';
        if (t.values[m][d]) out << format_double(*t.values[m][d]);
      }
      for (int want : {1, 2}) {
        out << ',';
        bool first = true;
        for (std::size_t m = 0; m < t.models.size(); ++m) {
          if (flags[m] != want) continue;
          out << (first ? "" : ";") << t.models[m];
          first = false;
        }
      }
      out << '\n';
    }
    out << "average_rank";
    for (std::size_t m = 0; m < t.models.size(); ++m) {
      out << ',';
      if (!t.average_rank.empty()) out << format_double(t.average_rank[m]);
    }
    out << ",,\n";
    return out.str();
  }

  out << "| Dataset |";
  for (const auto& m : t.models) out << ' ' << m << " |";
  out << "\n|---|";
  for (std::size_t m = 0; m < t.models.size(); ++m) out << "---:|";
  out << '\n';
  for (std::size_t d = 0; d < t.datasets.size(); ++d) {
    const std::vector<int> flags = row_flags(t, d, higher, q.suppress_distant_second);
    out << "| " << t.datasets[d] << " |";
    for (std::size_t m = 0; m < t.models.size(); ++m) {
      if (!t.values[m][d]) {
        out << " - |";
        continue;
      }
      std::string cell = format_fixed(*t.values[m][d], 4) + " ± " +
                         format_fixed(t.stds[m][d].value_or(0.0), 4);
      if (flags[m] == 1) cell = "**" + cell + "**";
      if (flags[m] == 2) cell = "<u>" + cell + "</u>";
      out << ' ' << cell << " |";
    }
    out << '\n';
  }
  out << "| Avg. Rank |";
  for (std::size_t m = 0; m < t.models.size(); ++m) {
    out << ' ' << (t.average_rank.empty() ? "-" : format_double(t.average_rank[m])) << " |";
  }
  out << '\n';
  return out.str();
}

std::string emit_leaderboard(const std::vector<ResultRecord>& records,
                             const LeaderboardQuery& q, TableFormat format) {
  return render_leaderboard(build_leaderboard(records, q), q, format);
}

}  // namespace tgbench::board
