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
#include <map>
#include <set>

#include "test_util.hpp"
#include "tgbench/baselines/edgebank.hpp"
#include "tgbench/baselines/logistic.hpp"
#include "tgbench/baselines/node_head.hpp"
#include "tgbench/baselines/predictor.hpp"
#include "tgbench/common/error.hpp"
#include "tgbench/train/protocol.hpp"

namespace tgbench::baselines {
namespace {

TEST(EdgeBank, UpdateAndScore) {
  EdgeMemory mem;
  edgebank_update(mem, {1, 2, 1.0});
  ASSERT_EQ(mem.seen.size(), 1u);
  EXPECT_EQ(mem.seen.at({1, 2}).count, 1u);
  edgebank_update(mem, {1, 2, 3.0});
  EXPECT_EQ(mem.seen.at({1, 2}).count, 2u);
  EXPECT_EQ(mem.seen.at({1, 2}).last_time, 3.0);
  EXPECT_EQ(edgebank_score(mem, 1, 2, 4.0), 1.0);
  EXPECT_EQ(edgebank_score(mem, 2, 1, 4.0), 0.0);
  EXPECT_EQ(edgebank_score(mem, 5, 6, 4.0), 0.0);
}

TEST(EdgeBank, OutOfOrderUpdate) {
  EdgeMemory mem;
  edgebank_update(mem, {1, 2, 5.0});
  edgebank_update(mem, {3, 4, 5.0});
  try {
    edgebank_update(mem, {1, 2, 4.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOutOfOrder);
  }
}

TEST(EdgeBank, DistinctPairCount) {
  const auto g = testing::random_stream(6, 1000, 20, 20, false);
  EdgeMemory mem;
  std::set<NodePair> oracle;
  for (const auto& it : g.interactions()) {
    edgebank_update(mem, it.query());
    oracle.insert(it.query().pair());
  }
  EXPECT_EQ(mem.seen.size(), oracle.size());
}

TEST(EdgeBank, Window) {
  EdgeMemory mem;
  mem.window = 2.0;
  edgebank_update(mem, {1, 2, 1.0});
  EXPECT_EQ(edgebank_score(mem, 1, 2, 2.0), 1.0);
  EXPECT_EQ(edgebank_score(mem, 1, 2, 3.0), 1.0);
  EXPECT_EQ(edgebank_score(mem, 1, 2, 3.5), 0.0);
  EXPECT_EQ(edgebank_score(mem, 1, 2, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(default_window(0.0, 100.0), 15.0);
  EXPECT_THROW(EdgeBankPredictor(0.0), Error);
  EXPECT_EQ(EdgeBankPredictor().id(), "edgebank");
  EXPECT_EQ(EdgeBankPredictor(1.0).id(), "edgebank-window");
}

TEST(EdgeBank, UnlimitedScoresAreMonotone) {
  const auto g = testing::random_stream(9, 400, 10, 10, false);
  EdgeMemory mem;
  std::vector<EdgeQuery> probes;
  for (NodeId u = 1; u <= 10; ++u) {
    for (NodeId v = 1; v <= 10; ++v) probes.push_back({u, v, 0.0});
  }
  std::vector<double> prev(probes.size(), 0.0);
  for (const auto& it : g.interactions()) {
    edgebank_update(mem, it.query());
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const double s = edgebank_score(mem, probes[k].src, probes[k].dst, it.timestamp + 1);
      EXPECT_GE(s, prev[k]);
      prev[k] = s;
    }
  }
}

TEST(TimeDecay, Scores) {
  TimeDecayPredictor p(2.0);
  p.observe({1, 2, 1.0, 0, 0});
  const std::vector<EdgeQuery> q{{1, 2, 3.0}, {1, 3, 3.0}};
  const auto s = p.score_edges(q);
  EXPECT_NEAR(s[0], std::exp(-1.0), 1e-15);
  EXPECT_EQ(s[1], 0.0);
  p.reset_state();
  EXPECT_EQ(p.score_edges(q)[0], 0.0);
}

TEST(Features, ColdNodes) {
  TemporalFeatureState st;
  const EdgeFeatures f = st.featurize(1, 2, 5.0);
  EXPECT_DOUBLE_EQ(f[0], std::log1p(5.0));
  EXPECT_DOUBLE_EQ(f[1], std::log1p(5.0));
  for (std::size_t k = 2; k < kEdgeFeatureCount; ++k) EXPECT_EQ(f[k], 0.0);
}

TEST(Features, PairSeenOnce) {
  TemporalFeatureState st;
  st.observe(1, 2, 4.0);
  const EdgeFeatures f = st.featurize(1, 2, 5.0);
  EXPECT_DOUBLE_EQ(f[0], std::log(2.0));
  EXPECT_DOUBLE_EQ(f[2], std::log(2.0));
  EXPECT_DOUBLE_EQ(f[4], std::log(2.0));
  EXPECT_EQ(f[5], 1.0);
  st.clear();
  EXPECT_EQ(st.featurize(1, 2, 5.0)[5], 0.0);
}

// Recompute every feature from the full prefix of the stream.
EdgeFeatures recompute(const std::vector<graph::Interaction>& prefix, NodeId s, NodeId d,
                       double t) {
  double last_s = 0;
  double last_d = 0;
  double deg_s = 0;
  double deg_d = 0;
  double pair = 0;
  for (const auto& it : prefix) {
    // Degree counts interactions, so a self-loop adds one.
    if (it.src == s || it.dst == s) {
      last_s = it.timestamp;
      deg_s += 1;
    }
    if (it.src == d || it.dst == d) {
      last_d = it.timestamp;
      deg_d += 1;
    }
    if (it.src == s && it.dst == d) pair += 1;
  }
  return {std::log1p(t - last_s), std::log1p(t - last_d), std::log1p(deg_s), std::log1p(deg_d),
          std::log1p(pair), pair > 0 ? 1.0 : 0.0};
}

TEST(Features, IncrementalMatchesRecompute) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = testing::random_stream(seed, 500, 12, 12, seed % 2 == 0);
    TemporalFeatureState st;
    std::vector<graph::Interaction> prefix;
    SeededRng rng(seed);
    for (const auto& it : g.interactions()) {
      const NodeId s = static_cast<NodeId>(1 + rng.uniform_index(24));
      const NodeId d = static_cast<NodeId>(1 + rng.uniform_index(24));
      const EdgeFeatures a = st.featurize(s, d, it.timestamp);
      const EdgeFeatures b = recompute(prefix, s, d, it.timestamp);
      for (std::size_t k = 0; k < kEdgeFeatureCount; ++k) EXPECT_DOUBLE_EQ(a[k], b[k]);
      st.observe(it.src, it.dst, it.timestamp);
      prefix.push_back(it);
    }
  }
}

TEST(Logistic, ZeroWeightsGiveHalf) {
  const LogisticModel m(6);
  const std::vector<double> x{1, -2, 3, 0.5, 9, 1};
  EXPECT_DOUBLE_EQ(logistic_forward(m, x), 0.5);
  EXPECT_THROW(logistic_forward(m, std::vector<double>{1.0}), Error);
}

double logistic_loss(const LogisticModel& m, std::span<const double> x, int y) {
  return train::bce_loss(logistic_forward(m, x), y).loss;
}

TEST(Logistic, GradientMatchesFiniteDifferences) {
  SeededRng rng(17);
  for (int c = 0; c < 100; ++c) {
    LogisticModel m(6);
    for (double& w : m.weights) w = rng.uniform01() - 0.5;
    m.bias = rng.uniform01() - 0.5;
    std::vector<double> x(6);
    for (double& v : x) v = rng.uniform01() * 2 - 1;
    const int y = static_cast<int>(rng.uniform_index(2));
    const auto g = logistic_backward(m, x, y);
    auto flat = m.flat();
    for (std::size_t k = 0; k < flat.size(); ++k) {
      const double h = 1e-6;
      auto plus = flat;
      auto minus = flat;
      plus[k] += h;
      minus[k] -= h;
      LogisticModel mp(6);
      LogisticModel mm(6);
      mp.assign(plus);
      mm.assign(minus);
      const double fd = (logistic_loss(mp, x, y) - logistic_loss(mm, x, y)) / (2 * h);
      EXPECT_LT(std::abs(fd - g[k]) / std::max(1e-3, std::abs(g[k])), 1e-5);
    }
  }
}

TEST(Logistic, SeparableSetReachesFullAccuracy) {
  SeededRng rng(2);
  const std::size_t n = 200;
  std::vector<std::vector<double>> xs;
  std::vector<int> ys;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(2);
    x[0] = rng.uniform01() * 2 - 1;
    x[1] = rng.uniform01() * 2 - 1;
    const double margin = x[0] + 0.5 * x[1];
    if (std::abs(margin) < 0.1) {
      --i;
      continue;
    }
    xs.push_back(x);
    ys.push_back(margin > 0 ? 1 : 0);
  }
  LogisticModel m(2);
  train::AdamState st(m.n_params(), 0.05);
  auto params = m.flat();
  for (int step = 0; step < 2000; ++step) {
    std::vector<double> grad(params.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto g = logistic_backward(m, xs[i], ys[i]);
      for (std::size_t k = 0; k < g.size(); ++k) grad[k] += g[k] / static_cast<double>(n);
    }
    train::adam_step(params, grad, st);
    m.assign(params);
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    correct += (logistic_forward(m, xs[i]) > 0.5) == (ys[i] == 1);
  }
  EXPECT_EQ(correct, n);
}

TEST(Softmax, GradientMatchesFiniteDifferences) {
  SeededRng rng(4);
  for (int c = 0; c < 30; ++c) {
    SoftmaxModel m(4, 3);
    auto flat = m.flat();
    for (double& v : flat) v = rng.uniform01() - 0.5;
    m.assign(flat);
    const std::vector<double> x{rng.uniform01(), rng.uniform01() - 1, 2 * rng.uniform01()};
    const int y = static_cast<int>(rng.uniform_index(4));
    const auto g = softmax_backward(m, x, y);
    for (std::size_t k = 0; k < flat.size(); ++k) {
      const double h = 1e-6;
      auto plus = flat;
      auto minus = flat;
      plus[k] += h;
      minus[k] -= h;
      SoftmaxModel mp(4, 3);
      SoftmaxModel mm(4, 3);
      mp.assign(plus);
      mm.assign(minus);
      const double fd = (softmax_loss(mp, x, y) - softmax_loss(mm, x, y)) / (2 * h);
      EXPECT_LT(std::abs(fd - g[k]) / std::max(1e-3, std::abs(g[k])), 1e-5);
    }
    const auto p = softmax_forward(m, x);
    double total = 0;
    for (double v : p) total += v;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Predictors, FutureEdgesDoNotLeak) {
  // Scores of the first 300 queries depend only on the first 300 events.
  const auto g = testing::random_stream(12, 600, 15, 15, true);
  const ModelContext ctx{g.time_min(), g.time_min(), g.time_max(), 1e-2, 0};
  for (const std::string& id : registered_models()) {
    auto a = make_predictor(id, ctx);
    auto b = make_predictor(id, ctx);
    std::vector<double> sa;
    std::vector<double> sb;
    SeededRng rng(1);
    std::vector<graph::Interaction> shuffled(g.interactions().begin(), g.interactions().end());
    for (std::size_t i = 300; i < shuffled.size(); ++i) {
      shuffled[i].dst = static_cast<NodeId>(16 + rng.uniform_index(15));
    }
    for (std::size_t i = 0; i < 300; ++i) {
      const std::vector<EdgeQuery> q{g[i].query()};
      sa.push_back(a->score_edges(q)[0]);
      sb.push_back(b->score_edges(q)[0]);
      a->observe(g[i]);
      b->observe(shuffled[i]);
    }
    EXPECT_EQ(sa, sb) << id;
  }
}

TEST(Predictors, Factory) {
  const ModelContext ctx{0.0, 0.0, 100.0, 1e-3, 0};
  EXPECT_EQ(make_predictor("edgebank", ctx)->id(), "edgebank");
  EXPECT_EQ(make_predictor("edgebank-window", ctx)->id(), "edgebank-window");
  EXPECT_EQ(make_predictor("time-decay", ctx, {{"tau", "5"}})->id(), "time-decay");
  auto lr = make_predictor("logistic", ctx, {{"lr", "0.01"}});
  EXPECT_TRUE(lr->trainable());
  EXPECT_EQ(lr->parameters().size(), kEdgeFeatureCount + 1);
  EXPECT_FALSE(make_predictor("edgebank", ctx)->trainable());
  EXPECT_THROW(make_predictor("tgn", ctx), Error);
  EXPECT_THROW(make_predictor("edgebank", ctx, {{"window", "1"}}), Error);
  EXPECT_THROW(make_predictor("logistic", ctx, {{"bogus", "1"}}), Error);
  EXPECT_EQ(registered_models().size(), 4u);
}

TEST(Predictors, LogisticTrainStepLowersLoss) {
  const auto g = testing::recency_stream(20, 50, 2000, 3);
  LogisticPredictor p(g.time_min(), 1e-2);
  std::vector<EdgeQuery> pos;
  std::vector<EdgeQuery> neg;
  for (std::size_t i = 0; i < 1000; ++i) p.observe(g[i]);
  SeededRng rng(0);
  for (std::size_t i = 1000; i < 1200; ++i) {
    pos.push_back(g[i].query());
    neg.push_back({g[i].src, static_cast<NodeId>(21 + rng.uniform_index(50)), g[i].timestamp});
  }
  const double first = p.train_step(pos, neg);
  double last = first;
  for (int k = 0; k < 200; ++k) last = p.train_step(pos, neg);
  EXPECT_LT(last, first);
  const auto params = p.parameters();
  LogisticPredictor q(g.time_min(), 1e-2);
  q.set_parameters(params);
  EXPECT_EQ(q.parameters(), params);
}

TEST(NodeHead, BinaryAndMulti) {
  NodeClassHead bin(2, 3, 1e-2);
  EXPECT_TRUE(bin.binary());
  const std::vector<double> rows{1, 0, 0, -1, 0, 0};
  const std::vector<int> labels{1, 0};
  for (int k = 0; k < 500; ++k) bin.train_step(rows, labels);
  const auto p = bin.predict(rows);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_GT(p[0], 0.9);
  EXPECT_LT(p[1], 0.1);

  NodeClassHead multi(3, 3, 1e-2);
  const std::vector<double> mrows{1, 0, 0, 0, 1, 0, 0, 0, 1};
  const std::vector<int> mlabels{0, 1, 2};
  for (int k = 0; k < 1000; ++k) multi.train_step(mrows, mlabels);
  const auto q = multi.predict(mrows);
  ASSERT_EQ(q.size(), 9u);
  for (int i = 0; i < 3; ++i) EXPECT_GT(q[i * 3 + i], 0.8);
  const auto params = multi.parameters();
  NodeClassHead copy(3, 3, 1e-2);
  copy.set_parameters(params);
  EXPECT_EQ(copy.predict(mrows), q);
  EXPECT_THROW(NodeClassHead(1, 3, 1e-2), Error);
}

TEST(NodeHead, FeaturesAppendEdgeFeatures) {
  const auto g = testing::random_stream(1, 10, 3, 3, true, 4);
  TemporalFeatureState st(g.time_min());
  const auto row = node_class_features(st, g, 2);
  ASSERT_EQ(row.size(), kEdgeFeatureCount + 4);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(row[kEdgeFeatureCount + k], static_cast<double>(g.edge_features(2)[k]));
  }
}

}  // namespace
}  // namespace tgbench::baselines
