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

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_util.hpp"
#include "tgbench/board/results.hpp"

namespace tgbench::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JODIE-style file: 0-based raw ids, 40 users, 25 items, one edge feature.
fs::path write_raw(const fs::path& dir) {
  const fs::path p = dir / "toy.csv";
  std::ofstream f(p);
  f << "user_id,item_id,timestamp,state_label,f0\n";
  SeededRng rng(1);
  for (int i = 0; i < 600; ++i) {
    const int u = i < 40 ? i : static_cast<int>(rng.uniform_index(40));
    const int v = i < 25 ? i : static_cast<int>(rng.uniform_index(25));
    f << u << ',' << v << ',' << i * 10 << ',' << (i % 7 == 0 ? 1 : 0) << ','
      << rng.uniform01() << '\n';
  }
  return p;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = tgbench::testing::temp_dir("cli");
    raw_ = write_raw(dir_);
    const Outcome o = call({"--data-dir", dir_.string(), "ingest", "--input", raw_.string()});
    ASSERT_EQ(o.code, 0) << o.err;
    const json j = json::parse(o.out);
    ASSERT_EQ(j.at("n_nodes"), 65);
    ASSERT_EQ(j.at("n_edges"), 600);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::vector<std::string> with_dir(std::vector<std::string> args) const {
    args.insert(args.begin(), {"--data-dir", dir_.string()});
    return args;
  }

  fs::path dir_;
  fs::path raw_;
};

TEST_F(CliTest, IngestWritesBundle) {
  for (const char* ext : {".edges.csv", ".edgefeat.f32", ".nodefeat.f32", ".meta.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / (std::string("toy") + ext))) << ext;
  }
}

TEST_F(CliTest, Stats) {
  const Outcome o = call(with_dir({"stats", "--dataset", "toy"}));
  ASSERT_EQ(o.code, 0) << o.err;
  // 600 edges over 65 nodes.
  EXPECT_NE(o.out.find("avg_degree 9.23\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("n_nodes 65\n"), std::string::npos);
  const Outcome j = call(with_dir({"stats", "--dataset", "toy", "--json"}));
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_DOUBLE_EQ(json::parse(j.out).at("avg_degree").get<double>(), 600.0 / 65.0);
  const Outcome raw = call({"stats", "--input", raw_.string(), "--json"});
  ASSERT_EQ(raw.code, 0) << raw.err;
  EXPECT_EQ(json::parse(raw.out).at("n_edges"), 600);
}

TEST_F(CliTest, HistogramCsv) {
  const Outcome o = call(with_dir({"hist", "--dataset", "toy", "--bins", "6"}));
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "bin_start,bin_end,count");
  std::size_t rows = 0;
  std::size_t total = 0;
  while (std::getline(in, line)) {
    ++rows;
    total += std::stoul(line.substr(line.rfind(',') + 1));
  }
  EXPECT_EQ(rows, 6u);
  EXPECT_EQ(total, 600u);
  const fs::path csv = dir_ / "h.csv";
  EXPECT_EQ(call(with_dir({"hist", "--dataset", "toy", "--out", csv.string()})).code, 0);
  EXPECT_TRUE(fs::exists(csv));
}

TEST_F(CliTest, SplitIsDeterministic) {
  const fs::path a = dir_ / "a.json";
  const fs::path b = dir_ / "b.json";
  const fs::path c = dir_ / "c.json";
  ASSERT_EQ(call(with_dir({"split", "--dataset", "toy", "--mask-seed", "4", "--out", a.string()})).code, 0);
  ASSERT_EQ(call(with_dir({"split", "--dataset", "toy", "--mask-seed", "4", "--out", b.string()})).code, 0);
  ASSERT_EQ(call(with_dir({"split", "--dataset", "toy", "--mask-seed", "5", "--out", c.string()})).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a), slurp(c));
  const Outcome nc = call(with_dir({"split", "--dataset", "toy", "--task", "nc"}));
  ASSERT_EQ(nc.code, 0) << nc.err;
  const json j = json::parse(nc.out);
  EXPECT_EQ(j.at("sizes").at("train").get<int>() + j.at("sizes").at("val").get<int>() +
                j.at("sizes").at("test").get<int>(),
            600);
  EXPECT_TRUE(fs::exists(dir_ / "toy.nc_splits.json"));
}

TEST_F(CliTest, RunRecordsAndLeaderboard) {
  const Outcome r1 = call(with_dir({"run", "--dataset", "toy", "--model", "edgebank"}));
  ASSERT_EQ(r1.code, 0) << r1.err;
  const Outcome r2 = call(with_dir({"run", "--dataset", "toy", "--model", "logistic",
                                     "--max-epochs", "2", "--lr", "0.01"}));
  ASSERT_EQ(r2.code, 0) << r2.err;
  const auto records = board::read_store(dir_ / "results.jsonl");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1].repeats, 3u);
  EXPECT_EQ(records[1].seeds.test, 2u);
  EXPECT_TRUE(records[1].metrics.contains("ap"));
  EXPECT_GE(records[1].std, 0.0);
  EXPECT_EQ(board::parse_record(r2.out.substr(0, r2.out.find('\n'))).model, "logistic");

  // Same identity again replaces rather than appends.
  EXPECT_EQ(call(with_dir({"run", "--dataset", "toy", "--model", "edgebank"})).code, 0);
  EXPECT_EQ(board::read_store(dir_ / "results.jsonl").size(), 2u);

  const Outcome lb = call(with_dir({"leaderboard"}));
  ASSERT_EQ(lb.code, 0) << lb.err;
  EXPECT_NE(lb.out.find("| Dataset | edgebank | logistic |"), std::string::npos) << lb.out;
  EXPECT_NE(lb.out.find("Avg. Rank"), std::string::npos);
  const Outcome csv = call(with_dir({"leaderboard", "--format", "csv"}));
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("dataset,edgebank,logistic,best,second", 0), 0u) << csv.out;
  EXPECT_EQ(call(with_dir({"leaderboard", "--setting", "new_new"})).code, 1);
}

TEST_F(CliTest, NodeClassificationRun) {
  const Outcome o = call(with_dir({"run", "--dataset", "toy", "--task", "nc", "--repeats", "1",
                                    "--max-epochs", "2"}));
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rec = board::parse_record(o.out.substr(0, o.out.find('\n')));
  EXPECT_EQ(rec.task, "node_classification");
  EXPECT_EQ(rec.metric, "auc");
}

TEST_F(CliTest, DataDirFromEnvironment) {
  ::setenv(kDataDirEnv, dir_.string().c_str(), 1);
  const Outcome o = call({"stats", "--dataset", "toy"});
  ::unsetenv(kDataDirEnv);
  EXPECT_EQ(o.code, 0) << o.err;
}

TEST(Cli, ErrorsAreMachineReadable) {
  Outcome o = call({"frobnicate"});
  EXPECT_EQ(o.code, 2);
  json j = json::parse(o.err);
  EXPECT_EQ(j.at("error"), "usage");
  o = call({"stats", "--dataset", "nope", "--data-dir", "/nonexistent"});
  EXPECT_EQ(o.code, 1);
  j = json::parse(o.err);
  EXPECT_TRUE(j.contains("message"));
  EXPECT_NE(j.at("error"), "usage");
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"hist", "--bins", "0", "--input", "x.csv"}).code, 2);
  EXPECT_EQ(call({"--version"}).code, 0);
}

}  // namespace
}  // namespace tgbench::cli
