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

#include "tgbench/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "tgbench/common/error.hpp"

namespace tgbench::metrics {

namespace {

// Indices ordered by descending score; ties keep index order.
std::vector<std::size_t> order_desc(std::span<const double> scores) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  return idx;
}

}  // namespace

BinaryScoreSet::BinaryScoreSet(std::vector<double> scores,
                               std::vector<std::uint8_t> labels)
    : scores_(std::move(scores)), labels_(std::move(labels)) {
  if (scores_.size() != labels_.size()) {
    fail(ErrorKind::kDimensionMismatch, "scores and labels differ in length");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] > 1) fail(ErrorKind::kInvalidArgument, "labels must be 0 or 1");
    if (std::isnan(scores_[i])) fail(ErrorKind::kNonFinite, "score is NaN");
    positives_ += labels_[i];
  }
}

BinaryScoreSet BinaryScoreSet::from_pos_neg(std::span<const double> pos,
                                            std::span<const double> neg) {
  std::vector<double> scores(pos.begin(), pos.end());
  scores.insert(scores.end(), neg.begin(), neg.end());
  std::vector<std::uint8_t> labels(pos.size(), 1);
  labels.resize(pos.size() + neg.size(), 0);
  return BinaryScoreSet(std::move(scores), std::move(labels));
}

double roc_auc(const BinaryScoreSet& s) {
  const std::size_t n_pos = s.positives();
  const std::size_t n_neg = s.negatives();
  if (n_pos == 0 || n_neg == 0) {
    fail(ErrorKind::kUndefinedMetric, "ROC AUC needs both positive and negative labels");
  }
  const auto scores = s.scores();
  const auto labels = s.labels();
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Ranks are 1-based; a tie group spanning positions [i, j) shares the
  // average rank (i + 1 + j) / 2, so every rank is a multiple of 1/2 and the
  // sum below is exact.
  double pos_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i + 1;
    while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) ++j;
    const double avg_rank = static_cast<double>(i + 1 + j) / 2.0;
    std::size_t pos_in_group = 0;
    for (std::size_t k = i; k < j; ++k) pos_in_group += labels[idx[k]];
    pos_rank_sum += avg_rank * static_cast<double>(pos_in_group);
    i = j;
  }
  const double np = static_cast<double>(n_pos);
  const double u = pos_rank_sum - np * (np + 1.0) / 2.0;
  return u / (np * static_cast<double>(n_neg));
}

double average_precision(const BinaryScoreSet& s) {
  const std::size_t n_pos = s.positives();
  if (n_pos == 0) fail(ErrorKind::kUndefinedMetric, "average precision needs a positive label");
  const auto scores = s.scores();
  const auto labels = s.labels();
  const std::vector<std::size_t> idx = order_desc(scores);

  const double total_pos = static_cast<double>(n_pos);
  double ap = 0.0;
  double prev_recall = 0.0;
  std::size_t tp = 0;
  std::size_t seen = 0;
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) {
      tp += labels[idx[j]];
      ++j;
    }
    seen = j;
    const double recall = static_cast<double>(tp) / total_pos;
    const double precision = static_cast<double>(tp) / static_cast<double>(seen);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  return ap;
}

MetricReport weighted_prf(std::span<const int> predictions,
                          std::span<const int> labels, std::size_t n_classes) {
  if (n_classes == 0) fail(ErrorKind::kInvalidArgument, "n_classes must be positive");
  if (predictions.size() != labels.size()) {
    fail(ErrorKind::kDimensionMismatch, "predictions and labels differ in length");
  }
  if (labels.empty()) fail(ErrorKind::kEmptyInput, "no items to evaluate");
  const auto check = [n_classes](int c) {
    if (c < 0 || static_cast<std::size_t>(c) >= n_classes) {
      fail(ErrorKind::kInvalidArgument, "class " + std::to_string(c) + " out of range");
    }
  };
  std::vector<std::size_t> tp(n_classes, 0);
  std::vector<std::size_t> predicted(n_classes, 0);
  std::vector<std::size_t> support(n_classes, 0);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    check(predictions[i]);
    check(labels[i]);
    ++predicted[predictions[i]];
    ++support[labels[i]];
    if (predictions[i] == labels[i]) {
      ++tp[labels[i]];
      ++correct;
    }
  }

  MetricReport r;
  r.per_class.resize(n_classes);
  double wp = 0.0;
  double wr = 0.0;
  double total_support = 0.0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    ClassStats& cs = r.per_class[c];
    cs.support = support[c];
    cs.precision_undefined = predicted[c] == 0;
    cs.recall_undefined = support[c] == 0;
    cs.precision = cs.precision_undefined
                       ? 0.0
                       : static_cast<double>(tp[c]) / static_cast<double>(predicted[c]);
    cs.recall = cs.recall_undefined
                    ? 0.0
                    : static_cast<double>(tp[c]) / static_cast<double>(support[c]);
    cs.f1 = cs.precision + cs.recall > 0.0
                ? 2.0 * cs.precision * cs.recall / (cs.precision + cs.recall)
                : 0.0;
    const double w = static_cast<double>(support[c]);
    wp += w * cs.precision;
    wr += w * cs.recall;
    total_support += w;
  }
  r.weighted_precision = wp / total_support;
  r.weighted_recall = wr / total_support;
  const double p = *r.weighted_precision;
  const double rec = *r.weighted_recall;
  r.weighted_f1 = p + rec > 0.0 ? 2.0 * p * rec / (p + rec) : 0.0;
  r.accuracy = static_cast<double>(correct) / static_cast<double>(labels.size());
  return r;
}

std::string to_json(const MetricReport& report) {
  using json = nlohmann::json;
  const auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json per_class = json::array();
  for (const ClassStats& c : report.per_class) {
    per_class.push_back({{"support", c.support},
                         {"precision", c.precision},
                         {"recall", c.recall},
                         {"f1", c.f1},
                         {"precision_undefined", c.precision_undefined},
                         {"recall_undefined", c.recall_undefined}});
  }
  const json j = {{"auc", opt(report.auc)},
                  {"ap", opt(report.ap)},
                  {"accuracy", opt(report.accuracy)},
                  {"weighted_precision", opt(report.weighted_precision)},
                  {"weighted_recall", opt(report.weighted_recall)},
                  {"weighted_f1", opt(report.weighted_f1)},
                  {"per_class", per_class}};
  return j.dump();
}

}  // namespace tgbench::metrics
