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

// Soft-finger contact between the robot gripper pads and the tool, the
// condition for holding the tool, and the gripper force the torsion springs
// demand.
//
// A soft-finger contact carries a tangential force f and a spin torque T
// about its normal, bounded by the elliptic limit surface
//
//   f^2 + T^2 / e^2 <= mu^2 Fn^2,
//
// where e = max T / max f is the contact eccentricity. All weights are in
// newtons.

#ifndef GRIPPER_TOOL_CONTACT_H_
#define GRIPPER_TOOL_CONTACT_H_

#include <string_view>

#include "gripper_tool/mechanism.h"

namespace gripper_tool {

struct ContactModel {
  double mu = 0.0;  // Coulomb friction coefficient
  double e = 0.0;   // eccentricity, m
};

// Which way the base frame travels as the jaw closes.
enum class BaseConfig {
  kBackwardBase,  // base retreats; gravity adds to the grip
  kForwardBase,   // base advances; gravity relieves the grip
};

std::string_view BaseConfigName(BaseConfig config);

// One situation of the tool held in a parallel gripper.
struct GraspState {
  double f_n = 0.0;     // gripper normal force, N
  double g_tool = 0.0;  // tool weight, N
  double alpha = 0.0;   // tool axis vs gravity
  double gamma = 0.0;   // hand vs tool axis
  double d = 0.0;       // grasp point to tool center of mass, m
  double d_com = 0.0;   // tool-gravity moment arm in object balance, m
  double theta = 0.0;   // current linkage angle
  BaseConfig config = BaseConfig::kBackwardBase;
};

struct ContactCapacity {
  double max_f = 0.0;  // N
  double max_t = 0.0;  // N*m
};

// Relative slack applied at the limit-surface boundary.
inline constexpr double kCapacitySlack = 1e-9;

void ValidateContactModel(const ContactModel& model);
void ValidateGraspState(const GraspState& state);

// True iff (f, t) lies inside the limit surface for normal force f_n.
bool CapacityCheck(const ContactModel& model, double f_n, double f, double t);

// max f = mu Fn and max T = e mu Fn.
ContactCapacity MaxCapacities(const ContactModel& model, double f_n);

// Largest grasp offset d at which the gripper still holds the tool:
//
//   d <= max T * sqrt((4 mu^2 Fn^2 - G^2) / (G^2 sin^2(alpha) mu^2 Fn^2)).
//
// `unbounded` is set when sin(alpha) = 0 (no torque demand). Throws
// InfeasibleHoldError when 2 mu Fn < G.
struct OffsetLimit {
  bool unbounded = false;
  double max_offset = 0.0;  // m; meaningful only when !unbounded
};
OffsetLimit HoldingMaxOffset(const ContactModel& model,
                             const GraspState& state);

// Gripper force Fn balancing the springs at linkage angle state.theta:
//
//   Fn = +/- G cos(alpha) tan(theta) / 2
//        + 2 v SpringTorque(theta_init - theta) / (r cos(theta)),
//
// with + for kBackwardBase and - for kForwardBase. Independent of the grasp
// offset d. Throws SingularTransmissionError at theta = pi/2 and DomainError
// for theta outside [theta_end, theta_init].
double RequiredGripForce(const ToolDimensions& dim, const SpringSpec& spring,
                         const GraspState& state);

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_CONTACT_H_
