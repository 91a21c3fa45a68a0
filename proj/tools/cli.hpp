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

#ifndef TGBENCH_TOOLS_CLI_HPP_
#define TGBENCH_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tgbench::cli {

inline constexpr const char* kDataDirEnv = "TGBENCH_DATA_DIR";

// Runs one `tgbench` invocation. args excludes the program name. Failures
// print {"error": <kind>, "message": ...} as one line on err and return
// nonzero (2 for usage errors, 1 otherwise).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgbench::cli

#endif  // TGBENCH_TOOLS_CLI_HPP_
