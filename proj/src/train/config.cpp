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

#include "tgbench/train/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tgbench/common/error.hpp"
#include "tgbench/common/format.hpp"

namespace tgbench::train {

std::string_view to_string(Task t) {
  return t == Task::kLinkPrediction ? "link_prediction" : "node_classification";
}

std::string_view to_string(Setting s) {
  switch (s) {
    case Setting::kTransductive: return "transductive";
    case Setting::kInductive: return "inductive";
    case Setting::kNewOld: return "new_old";
    case Setting::kNewNew: return "new_new";
  }
  return "?";
}

Task parse_task(std::string_view s) {
  if (s == "link_prediction" || s == "lp") return Task::kLinkPrediction;
  if (s == "node_classification" || s == "nc") return Task::kNodeClassification;
  fail(ErrorKind::kInvalidArgument, "unknown task '" + std::string(s) + "'");
}

Setting parse_setting(std::string_view s) {
  if (s == "transductive") return Setting::kTransductive;
  if (s == "inductive") return Setting::kInductive;
  if (s == "new_old") return Setting::kNewOld;
  if (s == "new_new") return Setting::kNewNew;
  fail(ErrorKind::kInvalidArgument, "unknown setting '" + std::string(s) + "'");
}

void validate(const RunConfig& cfg) {
  const auto bad = [](const std::string& msg) { fail(ErrorKind::kInvalidArgument, msg); };
  if (cfg.repeats < 1) bad("repeats must be at least 1");
  if (cfg.batch_size < 1) bad("batch_size must be at least 1");
  if (cfg.max_epochs < 1) bad("max_epochs must be at least 1");
  if (!(cfg.learning_rate > 0.0) || !std::isfinite(cfg.learning_rate)) {
    bad("lr must be positive");
  }
  if (!(cfg.tolerance >= 0.0)) bad("tolerance must be non-negative");
  if (!(cfg.unseen_ratio >= 0.0 && cfg.unseen_ratio < 1.0)) {
    bad("unseen_ratio must be in [0, 1)");
  }
  if (!(cfg.timeout_seconds > 0.0)) bad("timeout_seconds must be positive");
  if (cfg.task == Task::kNodeClassification && cfg.setting != Setting::kTransductive) {
    bad("node classification supports the transductive setting only");
  }
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    fail(ErrorKind::kParse,
         "bad value for " + std::string(key) + ": '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(ErrorKind::kParse, "bad boolean for " + std::string(key) + ": '" + std::string(v) + "'");
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key.starts_with("model.")) {
    cfg.model_options[std::string(key.substr(6))] = std::string(value);
  } else if (key == "dataset") {
    cfg.dataset = value;
  } else if (key == "data_dir") {
    cfg.data_dir = std::string(value);
  } else if (key == "task") {
    cfg.task = parse_task(value);
  } else if (key == "setting") {
    cfg.setting = parse_setting(value);
  } else if (key == "model") {
    cfg.model = value;
  } else if (key == "sampler" || key == "neg") {
    cfg.sampler = sampling::parse_negative_kind(value);
  } else if (key == "mask_seed") {
    cfg.mask_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "val_seed") {
    cfg.val_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "test_seed") {
    cfg.test_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "init_seed") {
    cfg.init_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "batch_size") {
    cfg.batch_size = parse_number<std::size_t>(key, value);
  } else if (key == "max_epochs") {
    cfg.max_epochs = parse_number<std::size_t>(key, value);
  } else if (key == "repeats") {
    cfg.repeats = parse_number<std::size_t>(key, value);
  } else if (key == "lr" || key == "learning_rate") {
    cfg.learning_rate = parse_number<double>(key, value);
  } else if (key == "patience") {
    cfg.patience = parse_number<std::size_t>(key, value);
  } else if (key == "tolerance") {
    cfg.tolerance = parse_number<double>(key, value);
  } else if (key == "unseen_ratio") {
    cfg.unseen_ratio = parse_number<double>(key, value);
  } else if (key == "timeout_seconds") {
    cfg.timeout_seconds = parse_number<double>(key, value);
  } else if (key == "reseed_val_per_epoch") {
    cfg.reseed_val_per_epoch = parse_bool(key, value);
  } else if (key == "exclude_background") {
    cfg.exclude_background = parse_bool(key, value);
  } else if (key == "background_labels") {
    cfg.background_labels.clear();
    std::string_view rest = value;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      if (!item.empty()) cfg.background_labels.push_back(parse_number<int>(key, item));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  } else {
    fail(ErrorKind::kInvalidArgument, "unknown config key '" + std::string(key) + "'");
  }
}

RunConfig parse_run_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::kParse, "config line " + std::to_string(line_no) + ": expected key=value");
    }
    set_config_value(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

RunConfig load_run_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), std::move(base));
}

std::string to_config_text(const RunConfig& cfg) {
  std::ostringstream out;
  out << "dataset=" << cfg.dataset << '\n'
      << "data_dir=" << cfg.data_dir.string() << '\n'
      << "task=" << to_string(cfg.task) << '\n'
      << "setting=" << to_string(cfg.setting) << '\n'
      << "model=" << cfg.model << '\n'
      << "sampler=" << sampling::to_string(cfg.sampler) << '\n'
      << "mask_seed=" << cfg.mask_seed << '\n'
      << "val_seed=" << cfg.val_seed << '\n'
      << "test_seed=" << cfg.test_seed << '\n'
      << "init_seed=" << cfg.init_seed << '\n'
      << "batch_size=" << cfg.batch_size << '\n'
      << "max_epochs=" << cfg.max_epochs << '\n'
      << "repeats=" << cfg.repeats << '\n'
      << "lr=" << format_double(cfg.learning_rate) << '\n'
      << "patience=" << cfg.patience << '\n'
      << "tolerance=" << format_double(cfg.tolerance) << '\n'
      << "unseen_ratio=" << format_double(cfg.unseen_ratio) << '\n'
      << "timeout_seconds=" << format_double(cfg.timeout_seconds) << '\n'
      << "reseed_val_per_epoch=" << (cfg.reseed_val_per_epoch ? "true" : "false") << '\n'
      << "exclude_background=" << (cfg.exclude_background ? "true" : "false") << '\n'
      << "background_labels=";
  for (std::size_t i = 0; i < cfg.background_labels.size(); ++i) {
    out << (i ? "," : "") << cfg.background_labels[i];
  }
  out << '\n';
  for (const auto& [k, v] : cfg.model_options) out << "model." << k << '=' << v << '\n';
  return out.str();
}

}  // namespace tgbench::train
