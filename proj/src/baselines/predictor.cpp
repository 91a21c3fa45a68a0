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

#include "tgbench/baselines/predictor.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <set>

#include "tgbench/baselines/edgebank.hpp"
#include "tgbench/baselines/logistic.hpp"
#include "tgbench/common/error.hpp"

namespace tgbench::baselines {

double Predictor::train_step(std::span<const EdgeQuery>, std::span<const EdgeQuery>) {
  return 0.0;
}

void Predictor::set_parameters(std::span<const double> params) {
  if (!params.empty()) {
    fail(ErrorKind::kDimensionMismatch,
         std::string(id()) + " has no parameters to set");
  }
}

namespace {

std::optional<double> option_double(const ModelOptions& options, const std::string& key) {
  const auto it = options.find(key);
  if (it == options.end()) return std::nullopt;
  const std::string& text = it->second;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    fail(ErrorKind::kInvalidArgument, "model." + key + " is not a number: '" + text + "'");
  }
  return value;
}

void check_known(std::string_view model_id, const ModelOptions& options,
                 const std::set<std::string>& known) {
  for (const auto& [key, value] : options) {
    if (!known.contains(key)) {
      fail(ErrorKind::kInvalidArgument,
           "unknown option model." + key + " for " + std::string(model_id));
    }
  }
}

}  // namespace

std::unique_ptr<Predictor> make_predictor(std::string_view model_id,
                                          const ModelContext& ctx,
                                          const ModelOptions& options) {
  if (model_id == "edgebank") {
    check_known(model_id, options, {});
    return std::make_unique<EdgeBankPredictor>();
  }
  if (model_id == "edgebank-window") {
    check_known(model_id, options, {"window"});
    const double w = option_double(options, "window")
                         .value_or(default_window(ctx.train_start, ctx.train_end));
    return std::make_unique<EdgeBankPredictor>(w);
  }
  if (model_id == "time-decay") {
    check_known(model_id, options, {"tau"});
    double tau = option_double(options, "tau")
                     .value_or(default_window(ctx.train_start, ctx.train_end));
    if (!(tau > 0.0)) tau = 1.0;
    return std::make_unique<TimeDecayPredictor>(tau);
  }
  if (model_id == "logistic") {
    check_known(model_id, options, {"lr"});
    const double lr = option_double(options, "lr").value_or(ctx.learning_rate);
    return std::make_unique<LogisticPredictor>(ctx.stream_start, lr);
  }
  fail(ErrorKind::kInvalidArgument, "unknown model '" + std::string(model_id) + "'");
}

const std::vector<std::string>& registered_models() {
  static const std::vector<std::string> ids{"edgebank", "edgebank-window", "time-decay",
                                            "logistic"};
  return ids;
}

}  // namespace tgbench::baselines
