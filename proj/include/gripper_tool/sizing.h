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

// Dimension feasibility and stroke maximization for a fixed open width.
//
// Interference constraints between the links, shafts and base frame:
//
//   m >= d_axis + 2 r_edge                        (base_width)
//   theta_end >= asin((d_axis + 2 r_edge) / r)    (theta_end_min)
//   p >= k sin(theta_end)                         (parallel_clearance)
//   h >= r cos(theta_end) + tan(theta_end) q      (frame_height)
//   theta_init < pi/2                             (transmission_singularity)

#ifndef GRIPPER_TOOL_SIZING_H_
#define GRIPPER_TOOL_SIZING_H_

#include <limits>
#include <string>
#include <vector>

#include "gripper_tool/contact.h"
#include "gripper_tool/mechanism.h"

namespace gripper_tool {

// A violated constraint. `margin` is lhs - rhs in the constraint's own units
// and is negative for a violation.
struct Violation {
  std::string constraint;
  double margin = 0.0;
};

// Smallest closing angle before the parallel linkage touches the base frame.
// Throws GeometryError when d_axis + 2 r_edge > r.
double ThetaEndMin(double r, double d_axis, double r_edge);

// Every interference constraint above that `dim` violates, in the order
// listed. Boundary values count as satisfied.
std::vector<Violation> CheckFeasible(const ToolDimensions& dim);

struct SizingBounds {
  double m_min = 0.0;
  double m_max = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  double theta_init_min = 0.0;
  double theta_init_max = 0.0;
};

struct SizingProblem {
  // Fixed by the design.
  double d_axis = 0.0;
  double r_edge = 0.0;
  double k = 0.0;
  double w_init = 0.0;
  double v = 1.0;
  SizingBounds bounds;
  // Largest acceptable RequiredGripForce anywhere on the stroke, N.
  double grip_budget = std::numeric_limits<double>::infinity();
  SpringSpec spring;
  // Template for the budget check; theta is overwritten.
  GraspState grasp;
};

struct SizingResult {
  ToolDimensions dims;
  double stroke = 0.0;
  // Constraints and bounds that hold with equality at the optimum.
  std::vector<std::string> active_constraints;
};

// Number of linkage angles, spread uniformly over [theta_end, theta_init],
// at which the grip budget is evaluated.
inline constexpr int kGripBudgetSamples = 64;

void ValidateSizingProblem(const SizingProblem& problem);

// Dimensions for design variables (m, theta_init, theta_end): r follows from
// the fixed open width, and p, h take the smallest values their clearance
// constraints allow.
ToolDimensions ComposeDimensions(const SizingProblem& problem, double m,
                                 double theta_init, double theta_end);

// Maximum RequiredGripForce over kGripBudgetSamples linkage angles.
double PeakGripForce(const ToolDimensions& dim, const SpringSpec& spring,
                     const GraspState& grasp);

// CheckFeasible plus the problem's bounds on m, r and theta_init and its grip
// budget. Empty iff `dim` is admissible for `problem`.
std::vector<Violation> AssessCandidate(const SizingProblem& problem,
                                       const ToolDimensions& dim);

// Admissible dimensions with the longest stroke. Ties go to smaller
// theta_init, then smaller m. Throws InfeasibleProblemError when no
// admissible design exists within the bounds.
//
// `jobs` parallelizes the coarse grid; the result does not depend on it.
SizingResult MaximizeStroke(const SizingProblem& problem, int jobs = 1);

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_SIZING_H_
