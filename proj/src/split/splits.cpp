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

#include "tgbench/split/splits.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "json.hpp"
#include "tgbench/common/error.hpp"
#include "tgbench/common/rng.hpp"

namespace tgbench::split {

using graph::Interaction;
using graph::TemporalGraph;
using json = nlohmann::json;

double empirical_quantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) fail(ErrorKind::kEmptyInput, "quantile of an empty sequence");
  if (!(q >= 0.0 && q <= 1.0)) {
    fail(ErrorKind::kInvalidArgument, "quantile level must lie in [0, 1]");
  }
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SplitBoundaries chronological_split(const TemporalGraph& graph, double q_val,
                                    double q_test) {
  if (graph.empty()) fail(ErrorKind::kEmptyInput, "cannot split an empty graph");
  if (!(q_val <= q_test)) {
    fail(ErrorKind::kInvalidArgument, "validation quantile exceeds test quantile");
  }
  std::vector<double> ts;
  ts.reserve(graph.n_edges());
  for (const Interaction& it : graph.interactions()) ts.push_back(it.timestamp);
  // Streams are sorted by construction; the quantile reads them directly.
  SplitBoundaries b;
  b.q_val = q_val;
  b.q_test = q_test;
  b.t_val = empirical_quantile(ts, q_val);
  b.t_test = empirical_quantile(ts, q_test);
  return b;
}

bool UnseenNodeSet::contains(NodeId v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

std::vector<std::uint8_t> UnseenNodeSet::flags(NodeId max_id) const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(std::max<NodeId>(max_id, 0)) + 1, 0);
  for (NodeId v : nodes) {
    if (v >= 0 && v <= max_id) out[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

UnseenNodeSet select_unseen_nodes(const TemporalGraph& graph,
                                  const SplitBoundaries& bounds, double ratio,
                                  std::uint64_t seed) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    fail(ErrorKind::kInvalidArgument, "mask ratio must lie in [0, 1]");
  }
  UnseenNodeSet u;
  u.seed = seed;
  u.ratio = ratio;
  u.target_size = static_cast<std::size_t>(
      std::floor(ratio * static_cast<double>(graph.n_nodes())));

  std::vector<NodeId> pool;
  for (const Interaction& it : graph.interactions()) {
    if (it.timestamp > bounds.t_val) {
      pool.push_back(it.src);
      pool.push_back(it.dst);
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.size() < u.target_size) {
    fail(ErrorKind::kInsufficientPool,
         "only " + std::to_string(pool.size()) +
             " nodes occur after the validation boundary; " +
             std::to_string(u.target_size) + " requested");
  }

  // Partial Fisher-Yates: the first target_size slots become the sample.
  SeededRng rng(seed);
  for (std::size_t i = 0; i < u.target_size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  u.nodes.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(u.target_size));
  std::sort(u.nodes.begin(), u.nodes.end());
  return u;
}

LinkPredSplits build_link_pred_splits(const TemporalGraph& graph,
                                      const SplitBoundaries& bounds,
                                      const UnseenNodeSet& unseen,
                                      kernels::Backend backend) {
  const std::vector<std::uint8_t> flags = unseen.flags(graph.max_node_id());
  const std::vector<kernels::EdgeTag> tags = kernels::classify_edges(
      graph.interactions(), bounds.t_val, bounds.t_test, flags, backend);

  LinkPredSplits s;
  for (std::size_t e = 0; e < tags.size(); ++e) {
    const kernels::EdgeTag tag = tags[e];
    switch (tag.span) {
      case 0:
        if (tag.unseen == 0) s.train.push_back(e);
        break;
      case 1:
        s.val.push_back(e);
        if (tag.unseen > 0) s.ind_val.push_back(e);
        if (tag.unseen == 1) s.no_val.push_back(e);
        if (tag.unseen == 2) s.nn_val.push_back(e);
        break;
      default:
        s.test.push_back(e);
        if (tag.unseen > 0) s.ind_test.push_back(e);
        if (tag.unseen == 1) s.no_test.push_back(e);
        if (tag.unseen == 2) s.nn_test.push_back(e);
        break;
    }
  }
  return s;
}

NodeClassSplits build_node_class_splits(const TemporalGraph& graph,
                                        const SplitBoundaries& bounds) {
  NodeClassSplits s;
  for (const Interaction& it : graph.interactions()) {
    if (it.timestamp <= bounds.t_val) {
      s.train.push_back(it.edge_index);
    } else if (it.timestamp <= bounds.t_test) {
      s.val.push_back(it.edge_index);
    } else {
      s.test.push_back(it.edge_index);
    }
  }
  return s;
}

namespace {

json bounds_json(const SplitBoundaries& b) {
  return {{"t_val", b.t_val}, {"t_test", b.t_test},
          {"q_val", b.q_val}, {"q_test", b.q_test}};
}

SplitBoundaries bounds_from_json(const json& j) {
  SplitBoundaries b;
  b.t_val = j.at("t_val").get<double>();
  b.t_test = j.at("t_test").get<double>();
  b.q_val = j.at("q_val").get<double>();
  b.q_test = j.at("q_test").get<double>();
  return b;
}

}  // namespace

std::string link_pred_splits_json(const std::string& dataset,
                                  const SplitBoundaries& bounds,
                                  const UnseenNodeSet& unseen,
                                  const LinkPredSplits& s) {
  json j = {
      {"dataset", dataset},
      {"task", "lp"},
      {"boundaries", bounds_json(bounds)},
      {"mask", {{"seed", unseen.seed},
                {"ratio", unseen.ratio},
                {"target_size", unseen.target_size},
                {"nodes", unseen.nodes}}},
      {"partitions", {{"train", s.train},
                      {"val", s.val},
                      {"test", s.test},
                      {"ind_val", s.ind_val},
                      {"ind_test", s.ind_test},
                      {"no_val", s.no_val},
                      {"no_test", s.no_test},
                      {"nn_val", s.nn_val},
                      {"nn_test", s.nn_test}}},
  };
  return j.dump() + "\n";
}

std::string node_class_splits_json(const std::string& dataset,
                                   const SplitBoundaries& bounds,
                                   const NodeClassSplits& s) {
  json j = {
      {"dataset", dataset},
      {"task", "nc"},
      {"boundaries", bounds_json(bounds)},
      {"partitions", {{"train", s.train}, {"val", s.val}, {"test", s.test}}},
  };
  return j.dump() + "\n";
}

LinkPredSplitFile parse_link_pred_splits_json(const std::string& text) {
  LinkPredSplitFile f;
  try {
    const json j = json::parse(text);
    if (j.at("task").get<std::string>() != "lp") {
      fail(ErrorKind::kParse, "splits file is not a link-prediction split");
    }
    f.dataset = j.at("dataset").get<std::string>();
    f.bounds = bounds_from_json(j.at("boundaries"));
    const json& m = j.at("mask");
    f.unseen.seed = m.at("seed").get<std::uint64_t>();
    f.unseen.ratio = m.at("ratio").get<double>();
    f.unseen.target_size = m.at("target_size").get<std::size_t>();
    f.unseen.nodes = m.at("nodes").get<std::vector<NodeId>>();
    const json& p = j.at("partitions");
    f.splits.train = p.at("train").get<std::vector<EdgeId>>();
    f.splits.val = p.at("val").get<std::vector<EdgeId>>();
    f.splits.test = p.at("test").get<std::vector<EdgeId>>();
    f.splits.ind_val = p.at("ind_val").get<std::vector<EdgeId>>();
    f.splits.ind_test = p.at("ind_test").get<std::vector<EdgeId>>();
    f.splits.no_val = p.at("no_val").get<std::vector<EdgeId>>();
    f.splits.no_test = p.at("no_test").get<std::vector<EdgeId>>();
    f.splits.nn_val = p.at("nn_val").get<std::vector<EdgeId>>();
    f.splits.nn_test = p.at("nn_test").get<std::vector<EdgeId>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("splits json: ") + e.what());
  }
  return f;
}

}  // namespace tgbench::split
