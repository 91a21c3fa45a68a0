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

#include "tgbench/graph/reindex.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tgbench/common/error.hpp"

namespace tgbench::graph {

std::string_view to_string(ReindexKind kind) {
  return kind == ReindexKind::kHeterogeneous ? "heterogeneous" : "homogeneous";
}

ReindexKind parse_reindex_kind(std::string_view s) {
  if (s == "heterogeneous" || s == "hetero") return ReindexKind::kHeterogeneous;
  if (s == "homogeneous" || s == "homo") return ReindexKind::kHomogeneous;
  fail(ErrorKind::kInvalidArgument, "unknown reindex kind '" + std::string(s) + "'");
}

NodeIndexMap::NodeIndexMap(ReindexKind kind, std::size_t n_users,
                           std::size_t n_items, std::vector<NodeId> originals)
    : kind_(kind),
      n_users_(n_users),
      n_items_(n_items),
      originals_(std::move(originals)) {
  if (kind_ == ReindexKind::kHeterogeneous &&
      n_users_ + n_items_ != originals_.size()) {
    fail(ErrorKind::kInvalidArgument,
         "heterogeneous map sizes do not add up to the node count");
  }
  build_lookup();
}

void NodeIndexMap::build_lookup() {
  src_lookup_.clear();
  dst_lookup_.clear();
  overlapping_ids_ = 0;
  const std::size_t n = originals_.size();
  if (kind_ == ReindexKind::kHeterogeneous) {
    src_lookup_.reserve(n_users_);
    dst_lookup_.reserve(n_items_);
    for (std::size_t k = 0; k < n_users_; ++k) {
      src_lookup_.emplace(originals_[k], static_cast<NodeId>(k + 1));
    }
    for (std::size_t k = n_users_; k < n; ++k) {
      dst_lookup_.emplace(originals_[k], static_cast<NodeId>(k + 1));
      if (src_lookup_.count(originals_[k]) != 0) ++overlapping_ids_;
    }
    if (src_lookup_.size() != n_users_ || dst_lookup_.size() != n_items_) {
      fail(ErrorKind::kInvalidArgument, "node index map is not a bijection");
    }
  } else {
    src_lookup_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      src_lookup_.emplace(originals_[k], static_cast<NodeId>(k + 1));
    }
    if (src_lookup_.size() != n) {
      fail(ErrorKind::kInvalidArgument, "node index map is not a bijection");
    }
  }
}

NodeId NodeIndexMap::map_src(NodeId original) const {
  const auto it = src_lookup_.find(original);
  if (it == src_lookup_.end()) {
    fail(ErrorKind::kInvalidArgument,
         "source id " + std::to_string(original) + " is not in the map");
  }
  return it->second;
}

NodeId NodeIndexMap::map_dst(NodeId original) const {
  const auto& lookup =
      kind_ == ReindexKind::kHeterogeneous ? dst_lookup_ : src_lookup_;
  const auto it = lookup.find(original);
  if (it == lookup.end()) {
    fail(ErrorKind::kInvalidArgument,
         "destination id " + std::to_string(original) + " is not in the map");
  }
  return it->second;
}

NodeId NodeIndexMap::original(NodeId contiguous) const {
  if (contiguous < 1 || static_cast<std::size_t>(contiguous) > originals_.size()) {
    fail(ErrorKind::kInvalidArgument,
         "contiguous id " + std::to_string(contiguous) + " is out of range");
  }
  return originals_[static_cast<std::size_t>(contiguous - 1)];
}

bool NodeIndexMap::is_user(NodeId contiguous) const {
  return kind_ == ReindexKind::kHeterogeneous &&
         contiguous >= 1 && static_cast<std::size_t>(contiguous) <= n_users_;
}

ReindexResult reindex(const TemporalGraph& graph, ReindexKind kind) {
  const auto stream = graph.interactions();
  NodeIndexMap map;
  if (kind == ReindexKind::kHeterogeneous) {
    if (!graph.bipartite()) {
      fail(ErrorKind::kInvalidArgument,
           "heterogeneous reindexing requires a bipartite graph");
    }
    std::vector<NodeId> users;
    std::vector<NodeId> items;
    users.reserve(stream.size());
    items.reserve(stream.size());
    for (const Interaction& it : stream) {
      users.push_back(it.src);
      items.push_back(it.dst);
    }
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    const std::size_t n_users = users.size();
    const std::size_t n_items = items.size();
    users.insert(users.end(), items.begin(), items.end());
    map = NodeIndexMap(kind, n_users, n_items, std::move(users));
  } else {
    std::vector<NodeId> order;
    std::unordered_map<NodeId, char> seen;
    seen.reserve(stream.size());
    const auto visit = [&](NodeId id) {
      if (seen.emplace(id, 0).second) order.push_back(id);
    };
    for (const Interaction& it : stream) visit(it.src);
    for (const Interaction& it : stream) visit(it.dst);
    map = NodeIndexMap(kind, 0, 0, std::move(order));
  }

  std::vector<Interaction> relabeled(stream.begin(), stream.end());
  for (Interaction& it : relabeled) {
    it.src = map.map_src(it.src);
    it.dst = map.map_dst(it.dst);
  }
  TemporalGraph out = TemporalGraph::from_sorted(
      std::move(relabeled), graph.edge_features(), graph.bipartite());
  return {std::move(out), std::move(map)};
}

TemporalGraph restore_original_ids(const TemporalGraph& graph,
                                   const NodeIndexMap& map) {
  std::vector<Interaction> restored(graph.interactions().begin(),
                                    graph.interactions().end());
  for (Interaction& it : restored) {
    it.src = map.original(it.src);
    it.dst = map.original(it.dst);
  }
  return TemporalGraph::from_sorted(std::move(restored), graph.edge_features(),
                                    graph.bipartite());
}

}  // namespace tgbench::graph
