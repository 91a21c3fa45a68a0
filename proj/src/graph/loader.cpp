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

#include "tgbench/graph/loader.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tgbench/common/error.hpp"

namespace tgbench::graph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

// Integer ids, also accepting integral floats such as "12.0".
std::optional<std::int64_t> to_integer(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) return v;
  const auto d = to_double(s);
  if (d && std::isfinite(*d) && std::floor(*d) == *d &&
      std::fabs(*d) < 9.0e15) {
    return static_cast<std::int64_t>(*d);
  }
  return std::nullopt;
}

[[noreturn]] void row_error(std::string_view source, std::size_t line,
                            const std::string& what) {
  fail(ErrorKind::kParse, std::string(source) + ":" + std::to_string(line) +
                              ": " + what);
}

void split_fields(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

CsvColumns parse_columns(std::string_view spec) {
  CsvColumns cols;
  std::vector<std::string_view> items;
  split_fields(spec, items);
  for (std::string_view item : items) {
    item = trim(item);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::kInvalidArgument,
           "column mapping entry '" + std::string(item) + "' lacks '='");
    }
    const std::string_view key = trim(item.substr(0, eq));
    const auto value = to_integer(item.substr(eq + 1));
    if (!value) {
      fail(ErrorKind::kInvalidArgument,
           "column mapping value for '" + std::string(key) + "' is not an integer");
    }
    const int v = static_cast<int>(*value);
    if (key == "src") {
      cols.src = v;
    } else if (key == "dst") {
      cols.dst = v;
    } else if (key == "timestamp" || key == "ts") {
      cols.timestamp = v;
    } else if (key == "label") {
      cols.label = v;
    } else if (key == "features") {
      cols.feature_begin = v;
    } else if (key == "header") {
      cols.header = v != 0;
    } else {
      fail(ErrorKind::kInvalidArgument,
           "unknown column mapping key '" + std::string(key) + "'");
    }
  }
  if (cols.src < 0 || cols.dst < 0 || cols.timestamp < 0) {
    fail(ErrorKind::kInvalidArgument, "src, dst and timestamp columns are required");
  }
  return cols;
}

TemporalGraph parse_dataset(std::string_view text, bool bipartite,
                            const CsvColumns& columns, std::string_view source) {
  std::vector<RawInteraction> rows;
  std::vector<float> features;
  std::optional<std::size_t> d_e;
  std::vector<std::string_view> fields;
  const int required = std::max({columns.src, columns.dst, columns.timestamp,
                                 columns.label}) + 1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_pending = columns.header;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    split_fields(line, fields);
    if (static_cast<int>(fields.size()) < required) {
      row_error(source, line_no,
                "expected at least " + std::to_string(required) +
                    " columns, found " + std::to_string(fields.size()));
    }
    RawInteraction row;
    const auto src = to_integer(fields[columns.src]);
    const auto dst = to_integer(fields[columns.dst]);
    if (!src || !dst) row_error(source, line_no, "node id is not an integer");
    const auto ts = to_double(fields[columns.timestamp]);
    if (!ts) {
      row_error(source, line_no,
                "non-numeric timestamp '" +
                    std::string(trim(fields[columns.timestamp])) + "'");
    }
    if (!std::isfinite(*ts) || *ts < 0.0) {
      row_error(source, line_no, "timestamp must be finite and non-negative");
    }
    row.src = *src;
    row.dst = *dst;
    row.timestamp = *ts;
    if (columns.label >= 0) {
      const auto label = to_integer(fields[columns.label]);
      if (!label || *label < 0) {
        row_error(source, line_no, "state label must be a non-negative integer");
      }
      row.state_label = static_cast<std::int32_t>(*label);
    }

    std::size_t arity = 0;
    if (columns.feature_begin >= 0 &&
        fields.size() > static_cast<std::size_t>(columns.feature_begin)) {
      arity = fields.size() - static_cast<std::size_t>(columns.feature_begin);
    }
    if (!d_e) d_e = arity;
    if (arity != *d_e) {
      row_error(source, line_no,
                "inconsistent feature arity: " + std::to_string(arity) +
                    " values, first row had " + std::to_string(*d_e));
    }
    for (std::size_t k = 0; k < arity; ++k) {
      const auto v = to_double(fields[columns.feature_begin + k]);
      if (!v || !std::isfinite(*v)) {
        row_error(source, line_no,
                  "feature " + std::to_string(k) + " is not a finite number");
      }
      features.push_back(static_cast<float>(*v));
    }
    rows.push_back(row);
  }

  const std::size_t n = rows.size();
  const std::size_t dim = d_e.value_or(0);
  return TemporalGraph::from_rows(std::move(rows),
                                  FeatureMatrix(n, dim, std::move(features)),
                                  bipartite);
}

TemporalGraph load_dataset(const std::filesystem::path& path, bool bipartite,
                           const CsvColumns& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return parse_dataset(text, bipartite, columns, path.string());
}

}  // namespace tgbench::graph
