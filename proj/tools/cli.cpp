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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tgbench/board/leaderboard.hpp"
#include "tgbench/board/results.hpp"
#include "tgbench/common/error.hpp"
#include "tgbench/common/format.hpp"
#include "tgbench/graph/bundle.hpp"
#include "tgbench/graph/loader.hpp"
#include "tgbench/graph/reindex.hpp"
#include "tgbench/graph/stats.hpp"
#include "tgbench/split/splits.hpp"
#include "tgbench/train/config.hpp"
#include "tgbench/train/pipeline.hpp"

#ifndef TGBENCH_VERSION
#define TGBENCH_VERSION "0.0.0"
#endif

namespace tgbench::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GraphSource {
  std::string dataset;
  std::string input;
  std::string reindex = "heterogeneous";
  std::string columns;

  void add_to(CLI::App* app) {
    app->add_option("--dataset", dataset, "processed bundle name in the data directory");
    app->add_option("--input", input, "raw interaction CSV instead of a bundle");
    app->add_option("--reindex", reindex, "heterogeneous (bipartite) or homogeneous")
        ->check(CLI::IsMember({"heterogeneous", "homogeneous"}));
    app->add_option("--columns", columns, "column layout, e.g. src=0,dst=1,timestamp=2");
  }

  graph::TemporalGraph load(const fs::path& data_dir) const {
    if (dataset.empty() == input.empty()) {
      fail(ErrorKind::kUsage, "give exactly one of --dataset or --input");
    }
    if (!dataset.empty()) return graph::read_bundle(data_dir, dataset).graph;
    const bool bipartite = graph::parse_reindex_kind(reindex) == graph::ReindexKind::kHeterogeneous;
    const graph::CsvColumns cols = columns.empty() ? graph::CsvColumns{}
                                                   : graph::parse_columns(columns);
    return graph::load_dataset(input, bipartite, cols);
  }

  std::string name() const {
    return !dataset.empty() ? dataset : fs::path(input).stem().string();
  }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) fail(ErrorKind::kIo, "cannot write " + path.string());
  f << text;
  if (!f) fail(ErrorKind::kIo, "write failed for " + path.string());
}

int cmd_ingest(const fs::path& data_dir, const std::string& input, const std::string& name,
               const std::string& reindex_kind, const std::string& columns,
               std::size_t node_dim, std::ostream& out) {
  const graph::ReindexKind kind = graph::parse_reindex_kind(reindex_kind);
  const bool bipartite = kind == graph::ReindexKind::kHeterogeneous;
  const graph::CsvColumns cols = columns.empty() ? graph::CsvColumns{}
                                                 : graph::parse_columns(columns);
  const graph::TemporalGraph raw = graph::load_dataset(input, bipartite, cols);
  graph::ReindexResult rr = graph::reindex(raw, kind);
  graph::Bundle b;
  b.name = name.empty() ? fs::path(input).stem().string() : name;
  b.node_features = graph::init_node_features(rr.graph, node_dim);
  b.graph = std::move(rr.graph);
  b.map = std::move(rr.map);
  fs::create_directories(data_dir);
  graph::write_bundle(data_dir, b);
  const json j = {{"bundle", b.name},
                  {"data_dir", data_dir.string()},
                  {"n_nodes", b.graph.n_nodes()},
                  {"n_edges", b.graph.n_edges()},
                  {"edge_dim", b.graph.edge_dim()},
                  {"node_feature_dim", node_dim},
                  {"reindex", std::string(graph::to_string(kind))},
                  {"overlapping_raw_ids", b.map.overlapping_ids()}};
  out << j.dump() << '\n';
  return 0;
}

int cmd_stats(const graph::TemporalGraph& g, const std::string& name, bool as_json,
              std::ostream& out) {
  const graph::DatasetStats s = graph::stats(g);
  if (as_json) {
    const json j = {{"dataset", name},
                    {"n_nodes", s.n_nodes},
                    {"n_edges", s.n_edges},
                    {"n_src_distinct", s.n_src_distinct},
                    {"n_dst_distinct", s.n_dst_distinct},
                    {"avg_degree", s.avg_degree},
                    {"edge_density", s.edge_density},
                    {"time_min", s.time_min},
                    {"time_max", s.time_max}};
    out << j.dump() << '\n';
    return 0;
  }
  out << "dataset " << name << '\n'
      << "n_nodes " << s.n_nodes << '\n'
      << "n_edges " << s.n_edges << '\n'
      << "n_src_distinct " << s.n_src_distinct << '\n'
      << "n_dst_distinct " << s.n_dst_distinct << '\n'
      << "avg_degree " << format_fixed(s.avg_degree, 2) << '\n'
      << "edge_density " << format_fixed(s.edge_density, 4) << '\n'
      << "time_min " << format_double(s.time_min) << '\n'
      << "time_max " << format_double(s.time_max) << '\n';
  return 0;
}

int cmd_hist(const graph::TemporalGraph& g, std::size_t bins, const std::string& out_path,
             std::ostream& out) {
  const graph::Histogram h = graph::temporal_histogram(g, bins);
  std::string csv = "bin_start,bin_end,count\n";
  for (std::size_t k = 0; k < h.counts.size(); ++k) {
    csv += format_double(h.bin_edges[k]) + ',' + format_double(h.bin_edges[k + 1]) + ',' +
           std::to_string(h.counts[k]) + '\n';
  }
  if (out_path.empty()) {
    out << csv;
  } else {
    write_text(out_path, csv);
    out << json{{"histogram", out_path}, {"bins", bins}}.dump() << '\n';
  }
  return 0;
}

int cmd_split(const graph::TemporalGraph& g, const std::string& name, const fs::path& data_dir,
              const std::string& task, std::uint64_t mask_seed, double ratio,
              const std::string& out_path, std::ostream& out) {
  const split::SplitBoundaries bounds = split::chronological_split(g);
  std::string text;
  json summary = {{"dataset", name},
                  {"t_val", bounds.t_val},
                  {"t_test", bounds.t_test}};
  fs::path path = out_path;
  if (train::parse_task(task) == train::Task::kLinkPrediction) {
    const split::UnseenNodeSet unseen = split::select_unseen_nodes(g, bounds, ratio, mask_seed);
    const split::LinkPredSplits sp = split::build_link_pred_splits(g, bounds, unseen);
    text = split::link_pred_splits_json(name, bounds, unseen, sp);
    if (path.empty()) path = graph::bundle_path(data_dir, name, ".splits.json");
    summary["task"] = "link_prediction";
    summary["mask_seed"] = mask_seed;
    summary["unseen_nodes"] = unseen.nodes.size();
    summary["sizes"] = {{"train", sp.train.size()},     {"val", sp.val.size()},
                        {"test", sp.test.size()},       {"ind_val", sp.ind_val.size()},
                        {"ind_test", sp.ind_test.size()}, {"no_val", sp.no_val.size()},
                        {"no_test", sp.no_test.size()}, {"nn_val", sp.nn_val.size()},
                        {"nn_test", sp.nn_test.size()}};
  } else {
    const split::NodeClassSplits sp = split::build_node_class_splits(g, bounds);
    text = split::node_class_splits_json(name, bounds, sp);
    if (path.empty()) path = graph::bundle_path(data_dir, name, ".nc_splits.json");
    summary["task"] = "node_classification";
    summary["sizes"] = {{"train", sp.train.size()}, {"val", sp.val.size()},
                        {"test", sp.test.size()}};
  }
  write_text(path, text);
  summary["path"] = path.string();
  out << summary.dump() << '\n';
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto error_line = [&](std::string_view kind, const std::string& message) {
    err << json{{"error", std::string(kind)}, {"message", message}}.dump() << '\n';
  };

  CLI::App app{"tgbench: temporal graph benchmark harness", "tgbench"};
  app.set_version_flag("--version", std::string(TGBENCH_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  std::string data_dir_flag;
  app.add_option("--data-dir", data_dir_flag,
                 std::string("data directory (default $") + kDataDirEnv + " or .)");

  // ingest
  CLI::App* ingest = app.add_subcommand("ingest", "raw interaction CSV to a processed bundle");
  std::string ingest_input;
  std::string ingest_name;
  std::string ingest_reindex = "heterogeneous";
  std::string ingest_columns;
  std::size_t node_dim = 172;
  ingest->add_option("--input", ingest_input, "raw CSV")->required();
  ingest->add_option("--name", ingest_name, "bundle name (default: input file stem)");
  ingest->add_option("--reindex", ingest_reindex, "heterogeneous (bipartite) or homogeneous")
      ->check(CLI::IsMember({"heterogeneous", "homogeneous"}));
  ingest->add_option("--columns", ingest_columns, "column layout");
  ingest->add_option("--node-dim", node_dim, "node feature dimension");

  // stats
  CLI::App* stats_cmd = app.add_subcommand("stats", "dataset statistics");
  GraphSource stats_src;
  bool stats_json = false;
  stats_src.add_to(stats_cmd);
  stats_cmd->add_flag("--json", stats_json, "full-precision JSON output");

  // hist
  CLI::App* hist_cmd = app.add_subcommand("hist", "temporal edge histogram as CSV");
  GraphSource hist_src;
  std::size_t bins = 50;
  std::string hist_out;
  hist_src.add_to(hist_cmd);
  hist_cmd->add_option("--bins", bins, "number of equal-width bins")
      ->check(CLI::PositiveNumber);
  hist_cmd->add_option("--out", hist_out, "write the CSV here instead of stdout");

  // split
  CLI::App* split_cmd = app.add_subcommand("split", "write chronological/inductive splits");
  GraphSource split_src;
  std::string split_task = "lp";
  std::uint64_t split_seed = 0;
  double split_ratio = 0.1;
  std::string split_out;
  split_src.add_to(split_cmd);
  split_cmd->add_option("--task", split_task, "lp or nc")
      ->check(CLI::IsMember({"lp", "nc", "link_prediction", "node_classification"}));
  split_cmd->add_option("--mask-seed", split_seed, "unseen-node mask seed");
  split_cmd->add_option("--ratio", split_ratio, "unseen-node ratio");
  split_cmd->add_option("--out", split_out, "output path (default: bundle sibling)");

  // run
  CLI::App* run_cmd = app.add_subcommand("run", "train and evaluate, then record the result");
  std::string config_path;
  std::string store_flag;
  std::vector<std::string> model_opts;
  std::map<std::string, std::string> run_flags;
  const std::vector<std::pair<std::string, std::string>> run_keys = {
      {"--dataset", "dataset"},
      {"--task", "task"},
      {"--setting", "setting"},
      {"--model", "model"},
      {"--neg", "sampler"},
      {"--mask-seed", "mask_seed"},
      {"--val-seed", "val_seed"},
      {"--test-seed", "test_seed"},
      {"--init-seed", "init_seed"},
      {"--batch-size", "batch_size"},
      {"--max-epochs", "max_epochs"},
      {"--repeats", "repeats"},
      {"--lr", "lr"},
      {"--patience", "patience"},
      {"--tolerance", "tolerance"},
      {"--unseen-ratio", "unseen_ratio"},
      {"--timeout", "timeout_seconds"},
      {"--reseed-val-per-epoch", "reseed_val_per_epoch"},
      {"--background-labels", "background_labels"},
      {"--exclude-background", "exclude_background"},
  };
  for (const auto& [flag, key] : run_keys) {
    run_cmd->add_option(flag, run_flags[key], "config key " + key);
  }
  run_cmd->add_option("--config", config_path, "key=value config file");
  run_cmd->add_option("--model-opt", model_opts, "model option key=value (repeatable)");
  run_cmd->add_option("--store", store_flag, "result store (default <data-dir>/results.jsonl)");

  // leaderboard
  CLI::App* lb_cmd = app.add_subcommand("leaderboard", "models x datasets table with ranks");
  board::LeaderboardQuery q;
  std::string lb_store;
  std::string lb_format = "markdown";
  std::string lb_sampler;
  lb_cmd->add_option("--store", lb_store, "result store (default <data-dir>/results.jsonl)");
  lb_cmd->add_option("--task", q.task, "link_prediction or node_classification");
  lb_cmd->add_option("--setting", q.setting, "transductive, inductive, new_old, new_new");
  lb_cmd->add_option("--metric", q.metric, "metric name");
  lb_cmd->add_option("--sampler", lb_sampler, "only records with this negative sampler");
  lb_cmd->add_option("--format", lb_format, "markdown or csv")
      ->check(CLI::IsMember({"markdown", "md", "csv"}));
  lb_cmd->add_flag("--suppress-distant-second", q.suppress_distant_second,
                   "leave second-best unflagged when it trails by more than 0.05");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << TGBENCH_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    error_line(to_string(ErrorKind::kUsage), e.what());
    return 2;
  }

  fs::path data_dir = ".";
  if (!data_dir_flag.empty()) {
    data_dir = data_dir_flag;
  } else if (const char* env = std::getenv(kDataDirEnv); env && *env) {
    data_dir = env;
  }
  const auto store_path = [&](const std::string& flag) {
    return flag.empty() ? data_dir / "results.jsonl" : fs::path(flag);
  };

  try {
    if (ingest->parsed()) {
      return cmd_ingest(data_dir, ingest_input, ingest_name, ingest_reindex, ingest_columns,
                        node_dim, out);
    }
    if (stats_cmd->parsed()) {
      return cmd_stats(stats_src.load(data_dir), stats_src.name(), stats_json, out);
    }
    if (hist_cmd->parsed()) return cmd_hist(hist_src.load(data_dir), bins, hist_out, out);
    if (split_cmd->parsed()) {
      return cmd_split(split_src.load(data_dir), split_src.name(), data_dir, split_task,
                       split_seed, split_ratio, split_out, out);
    }
    if (run_cmd->parsed()) {
      train::RunConfig cfg;
      cfg.data_dir = data_dir;
      if (!config_path.empty()) cfg = train::load_run_config(config_path, cfg);
      for (const auto& [flag, key] : run_keys) {
        if (run_cmd->count(flag) > 0) train::set_config_value(cfg, key, run_flags[key]);
      }
      for (const std::string& kv : model_opts) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail(ErrorKind::kUsage, "--model-opt expects key=value");
        cfg.model_options[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      train::validate(cfg);
      const train::RunResult result = train::run(cfg);
      const board::ResultRecord rec =
          board::make_record(cfg, result, TGBENCH_VERSION, board::utc_timestamp_now());
      std::string warning;
      const fs::path store = store_path(store_flag);
      if (board::record_result(store, rec, &warning)) {
        err << json{{"warning", warning}}.dump() << '\n';
      }
      out << board::to_json_line(rec) << '\n';
      return 0;
    }
    if (lb_cmd->parsed()) {
      if (!lb_sampler.empty()) q.sampler = lb_sampler;
      const auto records = board::read_store(store_path(lb_store));
      const board::LeaderboardTable t = board::build_leaderboard(records, q);
      for (const std::string& w : t.warnings) err << json{{"warning", w}}.dump() << '\n';
      out << board::render_leaderboard(t, q, board::parse_table_format(lb_format));
      return 0;
    }
  } catch (const Error& e) {
    error_line(to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::kUsage ? 2 : 1;
  } catch (const std::exception& e) {
    error_line("internal_error", e.what());
    return 1;
  }
  error_line(to_string(ErrorKind::kUsage), "no subcommand given");
  return 2;
}

}  // namespace tgbench::cli
