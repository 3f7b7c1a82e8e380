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

// INI-style design files.
//
//   # comment
//   [tool]
//   m = 0.01
//   theta_init = 60deg
//
// Sections [tool], [spring], [contact] and [grasp] are required; [object]
// and [sizing] are optional. Lengths are meters, forces newtons, kappa is
// N*m/rad. Angle keys take radians, or degrees with a "deg" suffix. Unknown
// sections or keys, duplicates and missing keys are errors.

#ifndef GRIPPER_TOOL_DESIGN_FILE_H_
#define GRIPPER_TOOL_DESIGN_FILE_H_

#include <optional>
#include <string>
#include <string_view>

#include "gripper_tool/contact.h"
#include "gripper_tool/mechanism.h"
#include "gripper_tool/sizing.h"

namespace gripper_tool {

struct SizingSpec {
  SizingBounds bounds;
  double grip_budget = 0.0;  // may be +inf
};

struct DesignFile {
  ToolDimensions tool;
  SpringSpec spring;
  ContactModel contact;
  GraspState grasp;
  std::optional<double> d_obj;     // [object]
  std::optional<SizingSpec> sizing;  // [sizing]
};

// Throws ParseError naming the line and key of the first problem, including
// violated type invariants.
DesignFile ParseDesign(std::string_view text);

// Reads and parses a file; I/O failures are reported as ParseError on line 0.
DesignFile LoadDesign(const std::string& path);

// Canonical text for `design`: every value written in radians with enough
// digits to parse back bit-identically.
std::string SerializeDesign(const DesignFile& design);

// Sizing problem with the fixed parameters taken from the design's tool.
// Throws DomainError if the design has no [sizing] section.
SizingProblem MakeSizingProblem(const DesignFile& design);

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_DESIGN_FILE_H_
