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

#ifndef TGBENCH_COMMON_ERROR_HPP_
#define TGBENCH_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgbench {

// Stable identifiers; the CLI prints these in its machine-readable error line.
enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kIo,
  kEmptyInput,
  kUndefinedMetric,
  kDimensionMismatch,
  kNonFinite,
  kOverflow,
  kOutOfOrder,
  kInsufficientPool,
  kTimeout,
  kSingleClass,
  kUsage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace tgbench

#endif  // TGBENCH_COMMON_ERROR_HPP_
