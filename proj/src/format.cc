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

#include "gripper_tool/format.h"

#include <charconv>
#include <cstdio>

namespace gripper_tool {

std::string FormatNumber(double value) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof(buf), "%.9g", value);
  std::string out(buf, n);
  if (out == "-0") out = "0";
  return out;
}

std::string FormatExact(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace gripper_tool
