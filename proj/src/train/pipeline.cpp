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

#include "tgbench/train/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "tgbench/baselines/node_head.hpp"
#include "tgbench/common/error.hpp"
#include "tgbench/graph/bundle.hpp"
#include "tgbench/metrics/metrics.hpp"
#include "tgbench/split/splits.hpp"
#include "tgbench/train/profiler.hpp"
#include "tgbench/train/protocol.hpp"

namespace tgbench::train {

std::optional<MeanStd> RunResult::find(const std::string& split,
                                       const std::string& metric) const {
  const auto s = metrics.find(split);
  if (s == metrics.end()) return std::nullopt;
  const auto m = s->second.find(metric);
  if (m == s->second.end()) return std::nullopt;
  return m->second;
}

MeanStd aggregate(const std::vector<double>& values) {
  MeanStd out;
  out.n = values.size();
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(sq / static_cast<double>(values.size()));
  return out;
}

namespace {

using SplitMetrics = std::map<std::string, std::map<std::string, double>>;

class Deadline {
 public:
  explicit Deadline(double limit) : limit_(limit) {}
  void check() const {
    if (timer_.seconds() > limit_) {
      fail(ErrorKind::kTimeout,
           "run exceeded the wall-clock cap of " + std::to_string(limit_) + " s");
    }
  }

 private:
  WallTimer timer_;
  double limit_;
};

std::vector<EdgeQuery> queries_of(const graph::TemporalGraph& g, std::span<const EdgeId> ids) {
  std::vector<EdgeQuery> out;
  out.reserve(ids.size());
  for (EdgeId e : ids) out.push_back(g[e].query());
  return out;
}

template <typename F>
void for_each_batch(std::size_t n, std::size_t batch_size, F&& f) {
  for (std::size_t b = 0; b < n; b += batch_size) f(b, std::min(n, b + batch_size));
}

struct ScoredStream {
  std::vector<double> pos;
  std::vector<double> neg;
  std::size_t fallbacks = 0;
};

// Scores each batch against the state before it, then observes the batch.
ScoredStream score_stream(baselines::Predictor& model, const graph::TemporalGraph& g,
                          std::span<const EdgeId> ids, const sampling::NegativePool& pool,
                          SeededRng& rng, std::size_t batch_size, const Deadline& deadline) {
  ScoredStream out;
  const std::vector<EdgeQuery> all = queries_of(g, ids);
  for_each_batch(ids.size(), batch_size, [&](std::size_t lo, std::size_t hi) {
    const std::span<const EdgeQuery> pos(all.data() + lo, hi - lo);
    const sampling::NegativeBatch neg = sampling::sample_negatives(pos, pool, rng);
    out.fallbacks += neg.fallbacks;
    const std::vector<double> sp = model.score_edges(pos);
    const std::vector<double> sn = model.score_edges(neg.edges);
    out.pos.insert(out.pos.end(), sp.begin(), sp.end());
    out.neg.insert(out.neg.end(), sn.begin(), sn.end());
    for (std::size_t i = lo; i < hi; ++i) model.observe(g[ids[i]]);
    deadline.check();
  });
  return out;
}

void observe_all(baselines::Predictor& model, const graph::TemporalGraph& g,
                 std::span<const EdgeId> ids) {
  for (EdgeId e : ids) model.observe(g[e]);
}

std::map<std::string, double> auc_ap(std::span<const double> pos, std::span<const double> neg) {
  const auto set = metrics::BinaryScoreSet::from_pos_neg(pos, neg);
  return {{"auc", metrics::roc_auc(set)}, {"ap", metrics::average_precision(set)}};
}

struct RepeatOutcome {
  SplitMetrics metrics;
  std::size_t epochs = 0;
  double seconds_per_epoch = 0.0;
  std::uint64_t peak_memory = 0;
  double inference_per_100k = 0.0;
  std::size_t fallbacks = 0;
};

RunResult combine(const std::vector<RepeatOutcome>& reps) {
  RunResult r;
  std::map<std::string, std::map<std::string, std::vector<double>>> pooled;
  double epochs = 0.0;
  double spe = 0.0;
  double inf = 0.0;
  for (const RepeatOutcome& o : reps) {
    for (const auto& [split, ms] : o.metrics) {
      for (const auto& [name, v] : ms) pooled[split][name].push_back(v);
    }
    r.epochs_per_repeat.push_back(o.epochs);
    epochs += static_cast<double>(o.epochs);
    spe += o.seconds_per_epoch;
    inf += o.inference_per_100k;
    r.peak_memory_bytes = std::max(r.peak_memory_bytes, o.peak_memory);
    r.negative_fallbacks += o.fallbacks;
  }
  for (const auto& [split, ms] : pooled) {
    for (const auto& [name, vs] : ms) r.metrics[split][name] = aggregate(vs);
  }
  const double n = static_cast<double>(reps.size());
  r.epochs_used = epochs / n;
  r.seconds_per_epoch = spe / n;
  r.inference_seconds_per_100k_edges = inf / n;
  return r;
}

std::string setting_key(Setting s) { return std::string(to_string(s)); }

}  // namespace

RunResult run_link_prediction(const graph::TemporalGraph& g, const RunConfig& cfg) {
  validate(cfg);
  if (cfg.task != Task::kLinkPrediction) {
    fail(ErrorKind::kInvalidArgument, "config task is not link_prediction");
  }
  if (g.empty()) fail(ErrorKind::kEmptyInput, "graph has no interactions");
  const Deadline deadline(cfg.timeout_seconds);

  const split::SplitBoundaries bounds = split::chronological_split(g);
  const split::UnseenNodeSet unseen =
      split::select_unseen_nodes(g, bounds, cfg.unseen_ratio, cfg.mask_seed);
  const split::LinkPredSplits sp = split::build_link_pred_splits(g, bounds, unseen);
  if (sp.train.empty() || sp.val.empty() || sp.test.empty()) {
    fail(ErrorKind::kEmptyInput, "train, validation or test split is empty");
  }

  // Test positions of each evaluation setting.
  std::map<std::string, std::vector<std::size_t>> setting_rows;
  {
    const std::unordered_set<EdgeId> ind(sp.ind_test.begin(), sp.ind_test.end());
    const std::unordered_set<EdgeId> no(sp.no_test.begin(), sp.no_test.end());
    for (std::size_t i = 0; i < sp.test.size(); ++i) {
      const EdgeId e = sp.test[i];
      if (!ind.contains(e)) {
        setting_rows["transductive"].push_back(i);
        continue;
      }
      setting_rows["inductive"].push_back(i);
      setting_rows[no.contains(e) ? "new_old" : "new_new"].push_back(i);
    }
  }
  if (!setting_rows.contains(setting_key(cfg.setting))) {
    fail(ErrorKind::kSingleClass,
         "no test edges for the " + setting_key(cfg.setting) + " setting");
  }

  const auto train_pool =
      sampling::build_negative_pool(g, sp.train, sampling::NegativeKind::kRandom);
  const auto eval_pool = sampling::build_negative_pool(g, sp.train, cfg.sampler);
  const std::vector<EdgeQuery> train_q = queries_of(g, sp.train);

  baselines::ModelContext ctx;
  ctx.stream_start = g.time_min();
  ctx.train_start = g.time_min();
  ctx.train_end = bounds.t_val;
  ctx.learning_rate = cfg.learning_rate;

  std::vector<RepeatOutcome> reps;
  for (std::size_t rep = 0; rep < cfg.repeats; ++rep) {
    const std::uint64_t rep_seed = derive_seed(cfg.init_seed, rep);
    ctx.init_seed = rep_seed;
    auto model = baselines::make_predictor(cfg.model, ctx, cfg.model_options);
    const std::size_t max_epochs = model->trainable() ? cfg.max_epochs : 1;

    RepeatOutcome out;
    RunProfiler prof;
    EarlyStopMonitor monitor(cfg.patience, cfg.tolerance);
    std::vector<double> best_params = model->parameters();

    for (std::size_t epoch = 0; epoch < max_epochs; ++epoch) {
      prof.begin_epoch();
      model->reset_state();
      SeededRng train_rng(derive_seed(rep_seed, epoch + 1));
      for_each_batch(train_q.size(), cfg.batch_size, [&](std::size_t lo, std::size_t hi) {
        const std::span<const EdgeQuery> pos(train_q.data() + lo, hi - lo);
        if (model->trainable()) {
          const auto neg = sampling::random_negatives(pos, train_pool, train_rng);
          model->train_step(pos, neg.edges);
        }
        for (std::size_t i = lo; i < hi; ++i) model->observe(g[sp.train[i]]);
        deadline.check();
      });

      SeededRng val_rng(cfg.reseed_val_per_epoch ? derive_seed(cfg.val_seed, epoch)
                                                 : cfg.val_seed);
      const ScoredStream val =
          score_stream(*model, g, sp.val, eval_pool, val_rng, cfg.batch_size, deadline);
      const auto set = metrics::BinaryScoreSet::from_pos_neg(val.pos, val.neg);
      const bool stop = monitor.update(metrics::average_precision(set));
      if (monitor.improved_last()) best_params = model->parameters();
      prof.end_epoch();
      prof.sample_memory();
      ++out.epochs;
      if (stop) break;
    }

    if (model->trainable()) model->set_parameters(best_params);
    model->reset_state();
    observe_all(*model, g, sp.train);
    SeededRng val_rng(cfg.val_seed);
    const ScoredStream val =
        score_stream(*model, g, sp.val, eval_pool, val_rng, cfg.batch_size, deadline);
    out.metrics["val"] = auc_ap(val.pos, val.neg);

    SeededRng test_rng(cfg.test_seed);
    const WallTimer infer;
    const ScoredStream test =
        score_stream(*model, g, sp.test, eval_pool, test_rng, cfg.batch_size, deadline);
    const double infer_seconds = infer.seconds();
    out.inference_per_100k = infer_seconds / static_cast<double>(sp.test.size()) * 1e5;
    out.fallbacks = val.fallbacks + test.fallbacks;

    for (const auto& [name, rows] : setting_rows) {
      std::vector<double> pos;
      std::vector<double> neg;
      for (std::size_t i : rows) {
        pos.push_back(test.pos[i]);
        neg.push_back(test.neg[i]);
      }
      out.metrics[name] = auc_ap(pos, neg);
    }
    prof.sample_memory();
    out.seconds_per_epoch = prof.mean_seconds_per_epoch();
    out.peak_memory = prof.peak_memory_bytes();
    reps.push_back(std::move(out));
  }

  RunResult r = combine(reps);
  r.unseen_nodes = unseen.nodes.size();
  return r;
}

RunResult run_node_classification(const graph::TemporalGraph& g, const RunConfig& cfg) {
  validate(cfg);
  if (cfg.task != Task::kNodeClassification) {
    fail(ErrorKind::kInvalidArgument, "config task is not node_classification");
  }
  if (g.empty()) fail(ErrorKind::kEmptyInput, "graph has no interactions");
  const Deadline deadline(cfg.timeout_seconds);

  const split::SplitBoundaries bounds = split::chronological_split(g);
  split::NodeClassSplits sp = split::build_node_class_splits(g, bounds);
  if (cfg.exclude_background && !cfg.background_labels.empty()) {
    const auto background = [&](EdgeId e) {
      return std::find(cfg.background_labels.begin(), cfg.background_labels.end(),
                       g[e].state_label) != cfg.background_labels.end();
    };
    for (auto* ids : {&sp.train, &sp.val, &sp.test}) std::erase_if(*ids, background);
  }
  if (sp.train.empty() || sp.val.empty() || sp.test.empty()) {
    fail(ErrorKind::kEmptyInput, "train, validation or test split is empty");
  }

  int max_label = 0;
  for (const auto* ids : {&sp.train, &sp.val, &sp.test}) {
    for (EdgeId e : *ids) max_label = std::max(max_label, g[e].state_label);
  }
  {
    const int first = g[sp.train.front()].state_label;
    const bool constant = std::all_of(sp.train.begin(), sp.train.end(),
                                      [&](EdgeId e) { return g[e].state_label == first; });
    if (constant) {
      fail(ErrorKind::kSingleClass, "training labels are constant (all " +
                                        std::to_string(first) + ")");
    }
  }
  const std::size_t n_classes = std::max<std::size_t>(2, static_cast<std::size_t>(max_label) + 1);
  const std::size_t dim = baselines::kEdgeFeatureCount + g.edge_dim();

  // Predictions for ids in stream order; features use the state before each batch.
  const auto predict_stream = [&](baselines::TemporalFeatureState& state,
                                  const baselines::NodeClassHead& head,
                                  std::span<const EdgeId> ids) {
    std::vector<double> out;
    for_each_batch(ids.size(), cfg.batch_size, [&](std::size_t lo, std::size_t hi) {
      std::vector<double> rows;
      rows.reserve((hi - lo) * dim);
      for (std::size_t i = lo; i < hi; ++i) {
        const auto row = baselines::node_class_features(state, g, ids[i]);
        rows.insert(rows.end(), row.begin(), row.end());
      }
      const std::vector<double> p = head.predict(rows);
      out.insert(out.end(), p.begin(), p.end());
      for (std::size_t i = lo; i < hi; ++i) {
        state.observe(g[ids[i]].src, g[ids[i]].dst, g[ids[i]].timestamp);
      }
      deadline.check();
    });
    return out;
  };

  const auto evaluate = [&](const std::vector<double>& pred, std::span<const EdgeId> ids) {
    std::vector<int> labels;
    for (EdgeId e : ids) labels.push_back(g[e].state_label);
    std::map<std::string, double> m;
    if (n_classes == 2) {
      std::vector<std::uint8_t> y(labels.begin(), labels.end());
      m["auc"] = metrics::roc_auc(metrics::BinaryScoreSet(pred, std::move(y)));
      return m;
    }
    std::vector<int> argmax(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto row = pred.begin() + static_cast<std::ptrdiff_t>(i * n_classes);
      argmax[i] = static_cast<int>(std::max_element(row, row + static_cast<std::ptrdiff_t>(n_classes)) - row);
    }
    const metrics::MetricReport rep = metrics::weighted_prf(argmax, labels, n_classes);
    m["accuracy"] = *rep.accuracy;
    m["weighted_precision"] = *rep.weighted_precision;
    m["weighted_recall"] = *rep.weighted_recall;
    m["weighted_f1"] = *rep.weighted_f1;
    return m;
  };
  const char* val_key = n_classes == 2 ? "auc" : "accuracy";

  std::vector<RepeatOutcome> reps;
  for (std::size_t rep = 0; rep < cfg.repeats; ++rep) {
    baselines::NodeClassHead head(n_classes, dim, cfg.learning_rate);
    baselines::TemporalFeatureState state(g.time_min());
    RepeatOutcome out;
    RunProfiler prof;
    EarlyStopMonitor monitor(cfg.patience, cfg.tolerance);
    std::vector<double> best_params = head.parameters();

    for (std::size_t epoch = 0; epoch < cfg.max_epochs; ++epoch) {
      prof.begin_epoch();
      state.clear();
      for_each_batch(sp.train.size(), cfg.batch_size, [&](std::size_t lo, std::size_t hi) {
        std::vector<double> rows;
        std::vector<int> labels;
        for (std::size_t i = lo; i < hi; ++i) {
          const auto row = baselines::node_class_features(state, g, sp.train[i]);
          rows.insert(rows.end(), row.begin(), row.end());
          labels.push_back(g[sp.train[i]].state_label);
        }
        head.train_step(rows, labels);
        for (std::size_t i = lo; i < hi; ++i) {
          const auto& it = g[sp.train[i]];
          state.observe(it.src, it.dst, it.timestamp);
        }
        deadline.check();
      });
      const auto val = evaluate(predict_stream(state, head, sp.val), sp.val);
      const bool stop = monitor.update(val.at(val_key));
      if (monitor.improved_last()) best_params = head.parameters();
      prof.end_epoch();
      prof.sample_memory();
      ++out.epochs;
      if (stop) break;
    }

    head.set_parameters(best_params);
    state.clear();
    for (EdgeId e : sp.train) state.observe(g[e].src, g[e].dst, g[e].timestamp);
    out.metrics["val"] = evaluate(predict_stream(state, head, sp.val), sp.val);
    const WallTimer infer;
    const auto test_pred = predict_stream(state, head, sp.test);
    out.inference_per_100k = infer.seconds() / static_cast<double>(sp.test.size()) * 1e5;
    out.metrics["test"] = evaluate(test_pred, sp.test);
    prof.sample_memory();
    out.seconds_per_epoch = prof.mean_seconds_per_epoch();
    out.peak_memory = prof.peak_memory_bytes();
    reps.push_back(std::move(out));
  }
  return combine(reps);
}

RunResult run(const RunConfig& cfg) {
  if (cfg.dataset.empty()) fail(ErrorKind::kInvalidArgument, "no dataset given");
  const graph::Bundle b = graph::read_bundle(cfg.data_dir, cfg.dataset);
  return cfg.task == Task::kLinkPrediction ? run_link_prediction(b.graph, cfg)
                                           : run_node_classification(b.graph, cfg);
}

std::string metrics_json(const RunResult& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [split, ms] : r.metrics) {
    for (const auto& [name, v] : ms) {
      j[split][name] = {{"mean", v.mean}, {"std", v.std}, {"n", v.n}};
    }
  }
  return j.dump();
}

}  // namespace tgbench::train
