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

#include "test_util.hpp"
#include "tgbench/common/error.hpp"
#include "tgbench/graph/bundle.hpp"
#include "tgbench/graph/reindex.hpp"
#include "tgbench/graph/stats.hpp"
#include "tgbench/metrics/metrics.hpp"
#include "tgbench/train/pipeline.hpp"

namespace tgbench::train {
namespace {

RunConfig lp_config(const std::string& model) {
  RunConfig cfg;
  cfg.dataset = "synthetic";
  cfg.model = model;
  return cfg;
}

TEST(Aggregate, PopulationStd) {
  const MeanStd m = aggregate({1.0, 3.0});
  EXPECT_DOUBLE_EQ(m.mean, 2.0);
  EXPECT_DOUBLE_EQ(m.std, 1.0);
  EXPECT_EQ(m.n, 2u);
  EXPECT_EQ(aggregate({}).n, 0u);
  EXPECT_DOUBLE_EQ(aggregate({0.7}).std, 0.0);
}

TEST(LinkPrediction, EdgeBankSeparatesReplayStream) {
  const auto g = testing::replay_stream(2000, 2000, 2);
  const RunResult r = run_link_prediction(g, lp_config("edgebank"));
  const auto auc = r.find("transductive", "auc");
  ASSERT_TRUE(auc.has_value());
  EXPECT_NEAR(auc->mean, 1.0, 1e-6);
  EXPECT_EQ(auc->n, 3u);
  EXPECT_EQ(r.epochs_used, 1.0);
  EXPECT_EQ(r.unseen_nodes, 400u);
  EXPECT_TRUE(r.find("val", "ap").has_value());
  EXPECT_TRUE(r.find("inductive", "auc").has_value());
}

TEST(LinkPrediction, Deterministic) {
  const auto g = testing::recency_stream(40, 60, 3000, 1);
  RunConfig cfg = lp_config("logistic");
  cfg.max_epochs = 3;
  cfg.learning_rate = 1e-2;
  EXPECT_EQ(metrics_json(run_link_prediction(g, cfg)), metrics_json(run_link_prediction(g, cfg)));
  cfg.sampler = sampling::NegativeKind::kHistorical;
  EXPECT_EQ(metrics_json(run_link_prediction(g, cfg)), metrics_json(run_link_prediction(g, cfg)));
}

TEST(LinkPrediction, LogisticLearnsRecency) {
  const auto g = testing::recency_stream(100, 200, 10000, 4);
  RunConfig cfg = lp_config("logistic");
  cfg.max_epochs = 10;
  cfg.learning_rate = 1e-2;
  const RunResult r = run_link_prediction(g, cfg);
  const auto auc = r.find("transductive", "auc");
  ASSERT_TRUE(auc.has_value());
  EXPECT_GT(auc->mean, 0.9);
  ASSERT_EQ(r.epochs_per_repeat.size(), 3u);
  for (std::size_t e : r.epochs_per_repeat) EXPECT_LE(e, cfg.max_epochs);
  EXPECT_GT(r.seconds_per_epoch, 0.0);
  EXPECT_GT(r.peak_memory_bytes, 0u);
}

TEST(LinkPrediction, SamplersAndSingleRepeat) {
  const auto g = testing::recency_stream(50, 80, 4000, 2);
  for (auto kind : {sampling::NegativeKind::kRandom, sampling::NegativeKind::kHistorical,
                    sampling::NegativeKind::kInductive}) {
    RunConfig cfg = lp_config("edgebank");
    cfg.sampler = kind;
    cfg.repeats = 1;
    const RunResult r = run_link_prediction(g, cfg);
    const auto auc = r.find("transductive", "auc");
    ASSERT_TRUE(auc.has_value());
    EXPECT_EQ(auc->std, 0.0);
    EXPECT_EQ(auc->n, 1u);
  }
}

TEST(LinkPrediction, EmptySettingIsRejected) {
  // Nine nodes mask nothing, so the inductive setting has no test edges.
  const auto g = testing::covering_homogeneous(9, 200, 3);
  RunConfig cfg = lp_config("edgebank");
  cfg.setting = Setting::kInductive;
  try {
    run_link_prediction(g, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSingleClass);
  }
  cfg.setting = Setting::kTransductive;
  EXPECT_FALSE(run_link_prediction(g, cfg).find("inductive", "auc").has_value());
}

TEST(LinkPrediction, Timeout) {
  const auto g = testing::recency_stream(50, 80, 4000, 2);
  RunConfig cfg = lp_config("logistic");
  cfg.timeout_seconds = 1e-9;
  try {
    run_link_prediction(g, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTimeout);
  }
}

TEST(LinkPrediction, WrongTask) {
  const auto g = testing::recency_stream(10, 10, 100, 2);
  RunConfig cfg = lp_config("edgebank");
  cfg.task = Task::kNodeClassification;
  EXPECT_THROW(run_link_prediction(g, cfg), Error);
}

// Labels follow a planted rule on the first edge feature.
graph::TemporalGraph planted_labels(std::size_t n, std::size_t classes, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<graph::RawInteraction> raw;
  std::vector<float> feats;
  for (std::size_t i = 0; i < n; ++i) {
    const auto label = static_cast<std::int32_t>(rng.uniform_index(classes));
    const double x = static_cast<double>(label) + 0.3 * (rng.uniform01() - 0.5);
    raw.push_back({static_cast<NodeId>(1 + rng.uniform_index(50)),
                   static_cast<NodeId>(51 + rng.uniform_index(50)), static_cast<double>(i + 1),
                   label});
    feats.push_back(static_cast<float>(x));
    feats.push_back(static_cast<float>(rng.uniform01()));
  }
  return graph::TemporalGraph::from_rows(std::move(raw),
                                         graph::FeatureMatrix(n, 2, std::move(feats)), true);
}

RunConfig nc_config() {
  RunConfig cfg;
  cfg.dataset = "synthetic";
  cfg.task = Task::kNodeClassification;
  cfg.learning_rate = 5e-2;
  cfg.max_epochs = 20;
  return cfg;
}

TEST(NodeClassification, ConstantLabelsRejected) {
  std::vector<testing::Row> rows;
  for (int i = 0; i < 100; ++i) rows.push_back({1 + i % 5, 10 + i % 7, static_cast<double>(i), 1});
  try {
    run_node_classification(testing::graph_of(rows, true), nc_config());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSingleClass);
  }
}

TEST(NodeClassification, PlantedBinaryLabels) {
  const RunResult r = run_node_classification(planted_labels(3000, 2, 1), nc_config());
  const auto auc = r.find("test", "auc");
  ASSERT_TRUE(auc.has_value());
  EXPECT_GT(auc->mean, 0.95);
  EXPECT_TRUE(r.find("val", "auc").has_value());
}

TEST(NodeClassification, BackgroundLabelsExcluded) {
  const auto g = planted_labels(3000, 4, 2);
  RunConfig cfg = nc_config();
  cfg.background_labels = {2, 3};
  const RunResult r = run_node_classification(g, cfg);
  EXPECT_TRUE(r.find("test", "auc").has_value());
  EXPECT_FALSE(r.find("test", "accuracy").has_value());
  cfg.exclude_background = false;
  EXPECT_TRUE(run_node_classification(g, cfg).find("test", "accuracy").has_value());
}

TEST(NodeClassification, FourClassWeightedMetrics) {
  RunConfig cfg = nc_config();
  cfg.repeats = 1;
  const RunResult r = run_node_classification(planted_labels(3000, 4, 3), cfg);
  const auto acc = r.find("test", "accuracy");
  const auto wr = r.find("test", "weighted_recall");
  const auto wp = r.find("test", "weighted_precision");
  const auto wf = r.find("test", "weighted_f1");
  ASSERT_TRUE(acc && wr && wp && wf);
  // Support-weighted recall reduces to accuracy.
  EXPECT_NEAR(wr->mean, acc->mean, 1e-12);
  EXPECT_NEAR(wf->mean, 2 * wp->mean * wr->mean / (wp->mean + wr->mean), 1e-12);
  EXPECT_GT(acc->mean, 0.9);
}

TEST(NodeClassification, RequiresTransductive) {
  RunConfig cfg = nc_config();
  cfg.setting = Setting::kInductive;
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Config, RoundTrip) {
  RunConfig cfg;
  cfg.dataset = "wikipedia";
  cfg.model = "edgebank-window";
  cfg.sampler = sampling::NegativeKind::kInductive;
  cfg.setting = Setting::kNewNew;
  cfg.learning_rate = 3e-4;
  cfg.repeats = 5;
  cfg.background_labels = {2, 3};
  cfg.model_options["window"] = "12.5";
  const RunConfig back = parse_run_config(to_config_text(cfg));
  EXPECT_EQ(to_config_text(back), to_config_text(cfg));
  EXPECT_EQ(back.setting, Setting::kNewNew);
  EXPECT_EQ(back.background_labels, (std::vector<int>{2, 3}));
  EXPECT_EQ(back.model_options.at("window"), "12.5");
  const RunConfig c2 = parse_run_config("# comment\n\ntask=nc\nlr=0.5\n");
  EXPECT_EQ(c2.task, Task::kNodeClassification);
  EXPECT_DOUBLE_EQ(c2.learning_rate, 0.5);
  EXPECT_THROW(parse_run_config("nope=1\n"), Error);
  EXPECT_THROW(parse_run_config("repeats=x\n"), Error);
  EXPECT_THROW(parse_run_config("just text\n"), Error);
}

TEST(Config, Defaults) {
  const RunConfig cfg;
  EXPECT_EQ(cfg.val_seed, 0u);
  EXPECT_EQ(cfg.test_seed, 2u);
  EXPECT_EQ(cfg.patience, 3u);
  EXPECT_DOUBLE_EQ(cfg.tolerance, 1e-3);
  EXPECT_DOUBLE_EQ(cfg.learning_rate, 1e-4);
  EXPECT_EQ(cfg.repeats, 3u);
  EXPECT_DOUBLE_EQ(cfg.unseen_ratio, 0.1);
  EXPECT_EQ(parse_setting("new_old"), Setting::kNewOld);
  EXPECT_EQ(parse_task("lp"), Task::kLinkPrediction);
}

TEST(Run, LoadsBundleFromDataDir) {
  const auto dir = testing::temp_dir("pipeline_run");
  graph::ReindexResult ri =
      graph::reindex(testing::replay_stream(300, 300, 2), graph::ReindexKind::kHeterogeneous);
  graph::Bundle b;
  b.name = "replay";
  b.node_features = graph::init_node_features(ri.graph, 4);
  b.graph = ri.graph;
  b.map = ri.map;
  graph::write_bundle(dir, b);
  const auto& g = b.graph;
  RunConfig cfg = lp_config("edgebank");
  cfg.dataset = "replay";
  cfg.data_dir = dir;
  cfg.repeats = 1;
  EXPECT_EQ(metrics_json(run(cfg)), metrics_json(run_link_prediction(g, cfg)));
  cfg.dataset = "missing";
  EXPECT_THROW(run(cfg), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace tgbench::train
