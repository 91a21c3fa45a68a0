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

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "large_scale_auc.hpp"
#include "test_util.hpp"
#include "tgbench/board/leaderboard.hpp"
#include "tgbench/board/results.hpp"
#include "tgbench/common/error.hpp"

namespace tgbench::board {
namespace {

ResultRecord record(const std::string& dataset, const std::string& model, double auc,
                    const std::string& setting = "transductive") {
  ResultRecord r;
  r.dataset = dataset;
  r.model = model;
  r.task = "link_prediction";
  r.setting = setting;
  r.sampler = "random";
  r.metric = "auc";
  r.mean = auc;
  r.std = 0.001;
  r.metrics["auc"] = {auc, 0.001};
  r.metrics["ap"] = {auc - 0.01, 0.002};
  r.repeats = 3;
  r.epochs_used = 4;
  r.seconds_per_epoch = 1.5;
  r.peak_memory_bytes = 1 << 20;
  r.inference_seconds_per_100k_edges = 0.25;
  r.harness_version = "1.0.0";
  r.timestamp = "2026-01-01T00:00:00Z";
  return r;
}

std::vector<ResultRecord> large_scale_records(const testing::LargeScaleSetting& s) {
  std::vector<ResultRecord> out;
  for (std::size_t d = 0; d < 4; ++d) {
    for (std::size_t m = 0; m < 7; ++m) {
      out.push_back(record(testing::kLargeDatasets[d], testing::kLargeModels[m], s.auc[d][m],
                           s.name));
    }
  }
  return out;
}

ValueMatrix large_scale_matrix(const testing::LargeScaleSetting& s) {
  ValueMatrix v(7, std::vector<std::optional<double>>(4));
  for (std::size_t d = 0; d < 4; ++d) {
    for (std::size_t m = 0; m < 7; ++m) v[m][d] = s.auc[d][m];
  }
  return v;
}

TEST(Records, JsonRoundTrip) {
  const ResultRecord r = record("wiki", "edgebank", 0.9);
  const std::string line = to_json_line(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(parse_record(line), r);
  EXPECT_THROW(parse_record("{}"), Error);
  EXPECT_THROW(parse_record("not json"), Error);
  ResultRecord bad = r;
  bad.dataset.clear();
  EXPECT_THROW(validate(bad), Error);
  bad = r;
  bad.mean = std::nan("");
  EXPECT_THROW(validate(bad), Error);
}

TEST(Records, MetricValue) {
  const ResultRecord r = record("wiki", "edgebank", 0.9);
  EXPECT_DOUBLE_EQ(*metric_value(r, "auc"), 0.9);
  EXPECT_DOUBLE_EQ(*metric_value(r, "seconds_per_epoch"), 1.5);
  EXPECT_DOUBLE_EQ(*metric_value(r, "peak_memory_bytes"), 1 << 20);
  EXPECT_FALSE(metric_value(r, "accuracy").has_value());
}

TEST(Store, AppendReadBackAndReplace) {
  const auto dir = testing::temp_dir("store");
  const auto store = dir / "results.jsonl";
  EXPECT_TRUE(read_store(store).empty());
  const ResultRecord a = record("wiki", "edgebank", 0.9);
  const ResultRecord b = record("wiki", "logistic", 0.8);
  std::string warning;
  EXPECT_FALSE(record_result(store, a, &warning));
  EXPECT_FALSE(record_result(store, b, &warning));
  EXPECT_EQ(read_store(store), (std::vector<ResultRecord>{a, b}));
  ResultRecord a2 = a;
  a2.mean = 0.95;
  a2.metrics["auc"].mean = 0.95;
  EXPECT_TRUE(record_result(store, a2, &warning));
  EXPECT_FALSE(warning.empty());
  EXPECT_EQ(read_store(store), (std::vector<ResultRecord>{a2, b}));
  ResultRecord other_seed = a;
  other_seed.seeds.mask = 7;
  EXPECT_FALSE(other_seed.same_identity(a));
  EXPECT_FALSE(record_result(store, other_seed));
  EXPECT_EQ(read_store(store).size(), 3u);
  std::filesystem::remove_all(dir);
}

TEST(Store, ThousandAppends) {
  const auto dir = testing::temp_dir("store1000");
  const auto store = dir / "results.jsonl";
  for (int i = 0; i < 1000; ++i) {
    ResultRecord r = record("d" + std::to_string(i % 10), "m" + std::to_string(i), 0.5);
    ASSERT_FALSE(record_result(store, r));
  }
  std::ifstream in(store);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    EXPECT_NO_THROW(parse_record(line));
    ++lines;
  }
  EXPECT_EQ(lines, 1000u);
  EXPECT_EQ(read_store(store).size(), 1000u);
  std::filesystem::remove_all(dir);
}

TEST(Ranks, Ties) {
  EXPECT_EQ(rank_column({0.9, 0.8, 0.7}, true), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(rank_column({0.9, 0.8, 0.7}, false), (std::vector<double>{3, 2, 1}));
  EXPECT_EQ(rank_column({0.5, 0.5, 0.1}, true), (std::vector<double>{1.5, 1.5, 3}));
  EXPECT_EQ(rank_column({0.2, 0.2, 0.2}, true), (std::vector<double>{2, 2, 2}));
  const ValueMatrix v{{0.9, 0.8}, {0.85, 0.85}};
  EXPECT_EQ(compute_average_rank(v, true), (std::vector<double>{1.5, 1.5}));
}

TEST(Ranks, PublishedLargeScaleSettings) {
  for (const auto& s : testing::kLargeScale) {
    const std::vector<double> got = compute_average_rank(large_scale_matrix(s), true);
    ASSERT_EQ(got.size(), 7u);
    for (std::size_t m = 0; m < 7; ++m) {
      EXPECT_EQ(got[m], s.average_rank[m]) << s.name << " " << testing::kLargeModels[m];
    }
  }
}

TEST(Ranks, MonotoneTransformInvariance) {
  SeededRng rng(3);
  for (int c = 0; c < 100; ++c) {
    ValueMatrix v(5, std::vector<std::optional<double>>(4));
    ValueMatrix t(5, std::vector<std::optional<double>>(4));
    for (std::size_t m = 0; m < 5; ++m) {
      for (std::size_t d = 0; d < 4; ++d) {
        const double x = static_cast<double>(rng.uniform_index(6)) / 5.0;
        v[m][d] = x;
        t[m][d] = std::exp(3 * x) - 7;
      }
    }
    EXPECT_EQ(compute_average_rank(v, true), compute_average_rank(t, true));
  }
}

TEST(Ranks, MissingCellsExcludeDataset) {
  ValueMatrix v{{0.9, std::nullopt, 0.1}, {0.8, 0.7, 0.2}};
  std::vector<std::string> warnings;
  EXPECT_EQ(compute_average_rank(v, true, &warnings), (std::vector<double>{1.5, 1.5}));
  EXPECT_EQ(warnings.size(), 1u);
  const ValueMatrix none{{std::nullopt}, {0.5}};
  EXPECT_THROW(compute_average_rank(none, true), Error);
  EXPECT_THROW(compute_average_rank({}, true), Error);
  const ValueMatrix ragged{{0.1, 0.2}, {0.3}};
  EXPECT_THROW(compute_average_rank(ragged, true), Error);
}

TEST(Registry, Directions) {
  EXPECT_TRUE(higher_is_better("auc"));
  EXPECT_TRUE(higher_is_better("weighted_f1"));
  EXPECT_FALSE(higher_is_better("seconds_per_epoch"));
  EXPECT_FALSE(higher_is_better("peak_memory_bytes"));
  EXPECT_THROW(higher_is_better("loss"), Error);
  EXPECT_FALSE(registered_metrics().empty());
}

TEST(Leaderboard, PublishedFooterFromStore) {
  for (const auto& s : testing::kLargeScale) {
    LeaderboardQuery q;
    q.setting = s.name;
    const LeaderboardTable t = build_leaderboard(large_scale_records(s), q);
    ASSERT_EQ(t.models.size(), 7u);
    for (std::size_t m = 0; m < 7; ++m) {
      std::size_t src = 0;
      while (testing::kLargeModels[src] != t.models[m]) ++src;
      EXPECT_EQ(t.average_rank[m], s.average_rank[src]);
    }
  }
}

TEST(Leaderboard, MarkdownFlagsBestAndSecond) {
  const std::vector<ResultRecord> recs{record("A", "m1", 0.9), record("A", "m2", 0.8),
                                       record("A", "m3", 0.7), record("B", "m1", 0.6),
                                       record("B", "m2", 0.65), record("B", "m3", 0.5)};
  LeaderboardQuery q;
  const std::string md = emit_leaderboard(recs, q, TableFormat::kMarkdown);
  EXPECT_NE(md.find("| Dataset | m1 | m2 | m3 |"), std::string::npos) << md;
  EXPECT_NE(md.find("**0.9000 ± 0.0010**"), std::string::npos) << md;
  EXPECT_NE(md.find("<u>0.8000 ± 0.0010</u>"), std::string::npos) << md;
  EXPECT_NE(md.find("| Avg. Rank | 1.5 | 1.5 | 3 |"), std::string::npos) << md;
  EXPECT_EQ(md, emit_leaderboard(recs, q, TableFormat::kMarkdown));
}

TEST(Leaderboard, DistantSecondSuppressed) {
  const std::vector<ResultRecord> recs{record("A", "m1", 0.9), record("A", "m2", 0.8)};
  LeaderboardQuery q;
  q.suppress_distant_second = true;
  const std::string md = emit_leaderboard(recs, q, TableFormat::kMarkdown);
  EXPECT_EQ(md.find("<u>"), std::string::npos) << md;
  const std::vector<ResultRecord> close{record("A", "m1", 0.9), record("A", "m2", 0.86)};
  EXPECT_NE(emit_leaderboard(close, q, TableFormat::kMarkdown).find("<u>"), std::string::npos);
}

TEST(Leaderboard, CsvRoundTrip) {
  const auto& s = testing::kLargeScale[0];
  LeaderboardQuery q;
  const auto recs = large_scale_records(s);
  const LeaderboardTable t = build_leaderboard(recs, q);
  const std::string csv = render_leaderboard(t, q, TableFormat::kCsv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("dataset,", 0), 0u);
  for (std::size_t d = 0; d < t.datasets.size(); ++d) {
    ASSERT_TRUE(std::getline(in, line));
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    EXPECT_EQ(cell, t.datasets[d]);
    for (std::size_t m = 0; m < t.models.size(); ++m) {
      std::getline(row, cell, ',');
      EXPECT_EQ(std::stod(cell), *t.values[m][d]);
    }
  }
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line.rfind("average_rank,", 0), 0u);
}

TEST(Leaderboard, SingleRecordAndEmptySelection) {
  const std::vector<ResultRecord> one{record("A", "m1", 0.7)};
  LeaderboardQuery q;
  const LeaderboardTable t = build_leaderboard(one, q);
  EXPECT_EQ(t.average_rank, (std::vector<double>{1.0}));
  q.setting = "inductive";
  try {
    build_leaderboard(one, q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyInput);
  }
  q.setting = "transductive";
  q.sampler = "historical";
  EXPECT_THROW(build_leaderboard(one, q), Error);
}

TEST(Leaderboard, LatestDuplicateWinsAndCostMetricsRankLow) {
  ResultRecord a = record("A", "m1", 0.5);
  ResultRecord b = record("A", "m1", 0.7);
  b.seeds.mask = 1;
  ResultRecord c = record("A", "m2", 0.6);
  c.seconds_per_epoch = 0.5;
  LeaderboardQuery q;
  const LeaderboardTable t = build_leaderboard({a, b, c}, q);
  EXPECT_EQ(*t.values[0][0], 0.7);
  EXPECT_FALSE(t.warnings.empty());
  q.metric = "seconds_per_epoch";
  EXPECT_EQ(build_leaderboard({a, c}, q).average_rank, (std::vector<double>{2.0, 1.0}));
  EXPECT_EQ(parse_table_format("csv"), TableFormat::kCsv);
  EXPECT_THROW(parse_table_format("html"), Error);
}

}  // namespace
}  // namespace tgbench::board
