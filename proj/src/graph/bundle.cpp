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

#include "tgbench/graph/bundle.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tgbench/common/error.hpp"
#include "tgbench/common/format.hpp"
#include "tgbench/graph/loader.hpp"

namespace tgbench::graph {

namespace {

using json = nlohmann::json;

constexpr int kBundleFormatVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b = {static_cast<char>(v & 0xFF),
                                 static_cast<char>((v >> 8) & 0xFF),
                                 static_cast<char>((v >> 16) & 0xFF),
                                 static_cast<char>((v >> 24) & 0xFF)};
  out.write(b.data(), 4);
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::kIo, "cannot write " + path.string());
  return out;
}

}  // namespace

std::filesystem::path bundle_path(const std::filesystem::path& dir,
                                  const std::string& name,
                                  const std::string& suffix) {
  return dir / (name + suffix);
}

void write_f32_matrix(const std::filesystem::path& path, const FeatureMatrix& m) {
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (m.rows() > kMax || m.dim() > kMax) {
    fail(ErrorKind::kInvalidArgument, "matrix too large for a .f32 header");
  }
  std::ofstream out = open_out(path);
  put_u32(out, static_cast<std::uint32_t>(m.rows()));
  put_u32(out, static_cast<std::uint32_t>(m.dim()));
  for (float v : m.values()) put_u32(out, std::bit_cast<std::uint32_t>(v));
  if (!out) fail(ErrorKind::kIo, "write failed for " + path.string());
}

FeatureMatrix read_f32_matrix(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() < 8) fail(ErrorKind::kParse, path.string() + ": truncated header");
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t rows = get_u32(p);
  const std::size_t cols = get_u32(p + 4);
  if (bytes.size() != 8 + rows * cols * 4) {
    fail(ErrorKind::kParse, path.string() + ": payload size does not match header " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
  std::vector<float> values(rows * cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<float>(get_u32(p + 8 + 4 * i));
  }
  return FeatureMatrix(rows, cols, std::move(values));
}

void write_bundle(const std::filesystem::path& dir, const Bundle& bundle) {
  std::filesystem::create_directories(dir);
  const TemporalGraph& g = bundle.graph;
  const std::string& name = bundle.name;

  {
    std::ofstream out = open_out(bundle_path(dir, name, ".edges.csv"));
    out << "src,dst,timestamp,label,edge_index\n";
    for (const Interaction& it : g.interactions()) {
      out << it.src << ',' << it.dst << ',' << format_double(it.timestamp) << ','
          << it.state_label << ',' << it.edge_index << '\n';
    }
    if (!out) fail(ErrorKind::kIo, "write failed for edges of " + name);
  }
  write_f32_matrix(bundle_path(dir, name, ".edgefeat.f32"), g.edge_features());
  write_f32_matrix(bundle_path(dir, name, ".nodefeat.f32"), bundle.node_features);
  {
    std::ofstream out = open_out(bundle_path(dir, name, ".nodemap.csv"));
    out << "contiguous_id,side,original_id\n";
    const auto& originals = bundle.map.originals();
    for (std::size_t k = 0; k < originals.size(); ++k) {
      const auto id = static_cast<NodeId>(k + 1);
      const char* side = bundle.map.kind() == ReindexKind::kHomogeneous
                             ? "node"
                             : (bundle.map.is_user(id) ? "user" : "item");
      out << id << ',' << side << ',' << originals[k] << '\n';
    }
  }

  json meta = {
      {"format_version", kBundleFormatVersion},
      {"name", name},
      {"n_nodes", g.n_nodes()},
      {"n_edges", g.n_edges()},
      {"d_e", g.edge_dim()},
      {"bipartite", g.bipartite()},
      {"reindex_kind", std::string(to_string(bundle.map.kind()))},
      {"n_users", bundle.map.n_users()},
      {"n_items", bundle.map.n_items()},
      {"node_feature_dim", bundle.node_features.dim()},
      {"reindex_map", name + ".nodemap.csv"},
      {"edges", name + ".edges.csv"},
      {"edge_features", name + ".edgefeat.f32"},
      {"node_features", name + ".nodefeat.f32"},
  };
  std::ofstream out = open_out(bundle_path(dir, name, ".meta.json"));
  out << meta.dump(2) << '\n';
}

Bundle read_bundle(const std::filesystem::path& dir, const std::string& name) {
  json meta;
  try {
    meta = json::parse(read_file(bundle_path(dir, name, ".meta.json")));
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, "meta.json for " + name + ": " + e.what());
  }
  const bool bipartite = meta.at("bipartite").get<bool>();

  CsvColumns cols;
  cols.feature_begin = -1;
  const TemporalGraph parsed = parse_dataset(
      read_file(dir / meta.at("edges").get<std::string>()), bipartite, cols,
      name + ".edges.csv");
  FeatureMatrix edge_features =
      read_f32_matrix(dir / meta.at("edge_features").get<std::string>());

  Bundle b;
  b.name = name;
  b.graph = TemporalGraph::from_sorted(
      std::vector<Interaction>(parsed.interactions().begin(),
                               parsed.interactions().end()),
      std::move(edge_features), bipartite);
  b.node_features = read_f32_matrix(dir / meta.at("node_features").get<std::string>());

  // Node map: contiguous ids are written in order, so originals follow rows.
  const std::string map_text = read_file(dir / meta.at("reindex_map").get<std::string>());
  std::vector<NodeId> originals;
  std::istringstream lines(map_text);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto last = line.rfind(',');
    originals.push_back(std::stoll(line.substr(last + 1)));
  }
  const ReindexKind kind = parse_reindex_kind(meta.at("reindex_kind").get<std::string>());
  b.map = NodeIndexMap(kind, meta.at("n_users").get<std::size_t>(),
                       meta.at("n_items").get<std::size_t>(), std::move(originals));

  if (b.graph.n_edges() != meta.at("n_edges").get<std::size_t>() ||
      b.graph.n_nodes() != meta.at("n_nodes").get<std::size_t>()) {
    fail(ErrorKind::kParse, "bundle " + name + " counts disagree with meta.json");
  }
  return b;
}

}  // namespace tgbench::graph
