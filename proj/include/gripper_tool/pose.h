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

// Torque margin of a working pose as a function of the hand-tool angle.

#ifndef GRIPPER_TOOL_POSE_H_
#define GRIPPER_TOOL_POSE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "gripper_tool/contact.h"

namespace gripper_tool {

// Spin-torque capacity left over at hand-tool angle gamma, with the tool
// horizontal and grasped at its center of mass:
//
//   margin = 2 e sqrt(mu^2 Fn^2 - f^2) - G d_com sin(gamma),
//   f = (G / 2) cos(gamma)   (tangential load per contact).
//
// Uses f_n, g_tool and d_com from `state`. Throws DomainError for gamma
// outside [0, pi/2] and ZeroCapacityError when f > mu Fn.
double TorqueMargin(const ContactModel& model, const GraspState& state,
                    double gamma);

struct MarginSample {
  double gamma = 0.0;
  std::optional<double> margin;  // empty where TorqueMargin threw
};

struct TorqueMarginCurve {
  std::vector<MarginSample> samples;  // strictly increasing gamma
  std::size_t peak_index = 0;         // argmax sample; first one on ties
  double peak_gamma = 0.0;            // refined by a parabola when interior
  double peak_margin = 0.0;
};

// n_samples uniform angles on [0, pi/2]. Throws DomainError when
// n_samples < 2 or when no sample has a margin.
TorqueMarginCurve GammaSweep(const ContactModel& model,
                             const GraspState& state, int n_samples,
                             int jobs = 1);

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_POSE_H_
