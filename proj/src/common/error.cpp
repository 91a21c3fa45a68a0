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

#include "tgbench/common/error.hpp"

namespace tgbench {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kParse: return "parse_error";
    case ErrorKind::kIo: return "io_error";
    case ErrorKind::kEmptyInput: return "empty_input";
    case ErrorKind::kUndefinedMetric: return "undefined_metric";
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kNonFinite: return "non_finite";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kOutOfOrder: return "out_of_order";
    case ErrorKind::kInsufficientPool: return "insufficient_pool";
    case ErrorKind::kTimeout: return "timeout";
    case ErrorKind::kSingleClass: return "single_class";
    case ErrorKind::kUsage: return "usage";
  }
  return "unknown";
}

}  // namespace tgbench
