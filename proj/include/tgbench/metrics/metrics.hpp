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

#ifndef TGBENCH_METRICS_METRICS_HPP_
#define TGBENCH_METRICS_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tgbench::metrics {

// Scores with binary labels (0 or 1) of equal length.
class BinaryScoreSet {
 public:
  BinaryScoreSet(std::vector<double> scores, std::vector<std::uint8_t> labels);

  // Positive scores followed by negative scores.
  static BinaryScoreSet from_pos_neg(std::span<const double> pos,
                                     std::span<const double> neg);

  std::span<const double> scores() const { return scores_; }
  std::span<const std::uint8_t> labels() const { return labels_; }
  std::size_t size() const { return scores_.size(); }
  std::size_t positives() const { return positives_; }
  std::size_t negatives() const { return scores_.size() - positives_; }

 private:
  std::vector<double> scores_;
  std::vector<std::uint8_t> labels_;
  std::size_t positives_ = 0;
};

// Mann-Whitney AUC with average ranks for tied scores. Throws
// kUndefinedMetric unless both classes are present.
double roc_auc(const BinaryScoreSet& s);

// Sum over descending-score threshold groups of (R_k - R_{k-1}) * P_k; equal
// scores form one group. Throws kUndefinedMetric without positives.
double average_precision(const BinaryScoreSet& s);

struct ClassStats {
  std::size_t support = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Set when precision (no predictions of the class) or recall (no support)
  // had a zero denominator and was defined as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

struct MetricReport {
  std::optional<double> auc;
  std::optional<double> ap;
  std::optional<double> accuracy;
  std::vector<ClassStats> per_class;
  std::optional<double> weighted_precision;
  std::optional<double> weighted_recall;
  std::optional<double> weighted_f1;
};

// Per-class and support-weighted precision/recall, F1 from the weighted
// precision and recall, and accuracy.
MetricReport weighted_prf(std::span<const int> predictions,
                          std::span<const int> labels, std::size_t n_classes);

// JSON with fixed field names: auc, ap, accuracy, weighted_precision,
// weighted_recall, weighted_f1, per_class[]; absent values are null.
std::string to_json(const MetricReport& report);

}  // namespace tgbench::metrics

#endif  // TGBENCH_METRICS_METRICS_HPP_
