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

#ifndef GRIPPER_TOOL_FORMAT_H_
#define GRIPPER_TOOL_FORMAT_H_

#include <numbers>
#include <string>

namespace gripper_tool {

// Nine significant digits, '.' decimal separator. All CLI numbers go through
// this so output is locale- and platform-stable.
std::string FormatNumber(double value);

// Shortest text that parses back to the same double.
std::string FormatExact(double value);

inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kStandardGravity = 9.80665;  // m/s^2

inline double ToDegrees(double radians) { return radians / kDegToRad; }

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_FORMAT_H_
