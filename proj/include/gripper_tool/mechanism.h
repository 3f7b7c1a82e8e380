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

// Kinematics of the symmetric double-parallelogram jaw and its torsion-spring
// return mechanism. Lengths in meters, angles in radians.

#ifndef GRIPPER_TOOL_MECHANISM_H_
#define GRIPPER_TOOL_MECHANISM_H_

namespace gripper_tool {

// Geometry of the two mirrored parallelograms.
//
// theta is the angle of the angular linkage; the jaw is fully open at
// theta_init and fully closed at theta_end. w_init and q are redundant
// (w_init = m + 2 r sin(theta_init), q = d_axis + 2 r_edge) and are checked by
// ValidateToolDimensions rather than silently recomputed.
struct ToolDimensions {
  double m = 0.0;           // base half-gap width
  double r = 0.0;           // angular-linkage length
  double theta_init = 0.0;  // linkage angle, jaw open
  double theta_end = 0.0;   // linkage angle, jaw closed
  double h = 0.0;           // base-frame height clearance
  double p = 0.0;           // linkage offset clearance
  double q = 0.0;           // joint clearance span
  double k = 0.0;           // parallel-linkage length
  double d_axis = 0.0;      // joint shaft diameter
  double r_edge = 0.0;      // material edge around a shaft
  double v = 1.0;           // spring-to-linkage transmission ratio
  double w_init = 0.0;      // fully open jaw width
};

// Torsion spring at each linkage joint, preloaded by a stopper.
struct SpringSpec {
  double kappa = 0.0;  // N*m/rad
  double beta = 0.0;   // preload angle
};

// Relative tolerance used for the redundant w_init and q fields.
inline constexpr double kWidthTieTolerance = 1e-6;
inline constexpr double kClearanceTieTolerance = 1e-9;

// Throws DomainError naming the first violated invariant: positive lengths,
// 0 <= theta_end < theta_init < pi/2, v > 0, and both redundant ties.
void ValidateToolDimensions(const ToolDimensions& dim);

// Throws DomainError unless kappa > 0 and beta >= 0.
void ValidateSpringSpec(const SpringSpec& spring);

// d_axis + 2 r_edge, the span a shaft and its surrounding material occupy.
inline double ShaftClearance(double d_axis, double r_edge) {
  return d_axis + 2.0 * r_edge;
}

// Jaw opening m + 2 r sin(theta) for theta in [theta_end, theta_init].
double JawWidth(const ToolDimensions& dim, double theta);

// Tooltip travel between open and closed: 2 r sin(theta_init - theta_end).
double Stroke(const ToolDimensions& dim);

// Same stroke with r eliminated through the fixed open width,
// r = (w_init - m) / (2 sin(theta_init)).
double FixedWidthStroke(double w_init, double m, double theta_init,
                        double theta_end);

// Torque kappa * (beta + delta_theta) applied to an angular linkage after it
// has rotated delta_theta >= 0 from the open position.
double SpringTorque(const SpringSpec& spring, double delta_theta);

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_MECHANISM_H_
