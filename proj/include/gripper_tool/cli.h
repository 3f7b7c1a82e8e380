// Copyright 2026 The Gripper Tool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRIPPER_TOOL_CLI_H_
#define GRIPPER_TOOL_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gripper_tool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Values of a "start:stop:step" range, optionally suffixed with "deg" (then
// converted to radians). A bare "value" is a one-point range. The stop value
// is included when it lies within 1e-12 of a step multiple. Throws
// UsageError on malformed input.
std::vector<double> ParseRange(std::string_view text, bool angle);

// Entry point for the gripper-tool command. `args` excludes the program
// name. Returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_CLI_H_
