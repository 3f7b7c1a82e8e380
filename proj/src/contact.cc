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

#include "gripper_tool/contact.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"

namespace gripper_tool {
namespace {

// 2 mu Fn within this relative distance of G counts as exactly G.
constexpr double kHoldTieTolerance = 1e-12;

// |sin(alpha)| below this is treated as zero (alpha = 0 or pi).
constexpr double kZeroSine = 1e-12;

// |cos(theta)| below this makes the spring transmission singular.
constexpr double kSingularCosine = 1e-12;

}  // namespace

std::string_view BaseConfigName(BaseConfig config) {
  switch (config) {
    case BaseConfig::kBackwardBase:
      return "backward";
    case BaseConfig::kForwardBase:
      return "forward";
  }
  return "unknown";
}

void ValidateContactModel(const ContactModel& model) {
  if (!(model.mu > 0.0)) {
    throw DomainError("ContactModel invariant violated: mu must be > 0, got " +
                      FormatNumber(model.mu));
  }
  if (!(model.e > 0.0)) {
    throw DomainError("ContactModel invariant violated: e must be > 0, got " +
                      FormatNumber(model.e));
  }
}

void ValidateGraspState(const GraspState& state) {
  auto fail = [](const std::string& what) {
    throw DomainError("GraspState invariant violated: " + what);
  };
  if (!(state.f_n >= 0.0)) fail("f_n must be >= 0");
  if (!(state.g_tool > 0.0)) fail("g_tool must be > 0");
  if (!(state.alpha >= 0.0 && state.alpha <= std::numbers::pi)) {
    fail("alpha must lie in [0, pi]");
  }
  if (!(state.gamma >= 0.0 && state.gamma <= std::numbers::pi / 2)) {
    fail("gamma must lie in [0, pi/2]");
  }
  if (!(state.d >= 0.0)) fail("d must be >= 0");
  if (!(state.d_com >= 0.0)) fail("d_com must be >= 0");
}

bool CapacityCheck(const ContactModel& model, double f_n, double f, double t) {
  const double demand = f * f + (t * t) / (model.e * model.e);
  const double limit = model.mu * model.mu * f_n * f_n;
  return demand <= limit * (1.0 + kCapacitySlack);
}

ContactCapacity MaxCapacities(const ContactModel& model, double f_n) {
  const double max_f = model.mu * f_n;
  return {max_f, model.e * max_f};
}

OffsetLimit HoldingMaxOffset(const ContactModel& model,
                             const GraspState& state) {
  const double g = state.g_tool;
  const double capacity = 2.0 * model.mu * state.f_n;
  const double deficit = g - capacity;
  if (deficit > kHoldTieTolerance * g) {
    throw InfeasibleHoldError("cannot hold tool: 2 mu Fn = " +
                                  FormatNumber(capacity) + " N < G = " +
                                  FormatNumber(g) + " N (deficit " +
                                  FormatNumber(deficit) + " N)",
                              deficit);
  }
  const double sin_alpha = std::sin(state.alpha);
  if (std::abs(sin_alpha) <= kZeroSine) return {.unbounded = true};
  if (deficit >= 0.0) return {.max_offset = 0.0};

  const double max_t = MaxCapacities(model, state.f_n).max_t;
  const double mu_fn_sq = model.mu * model.mu * state.f_n * state.f_n;
  const double ratio =
      (4.0 * mu_fn_sq - g * g) / (g * g * sin_alpha * sin_alpha * mu_fn_sq);
  return {.max_offset = max_t * std::sqrt(ratio)};
}

double RequiredGripForce(const ToolDimensions& dim, const SpringSpec& spring,
                         const GraspState& state) {
  const double cos_theta = std::cos(state.theta);
  if (std::abs(cos_theta) <= kSingularCosine) {
    throw SingularTransmissionError(
        "spring transmission is singular at theta = " +
        FormatNumber(state.theta) + " (cos theta = 0)");
  }
  if (!(state.theta >= dim.theta_end && state.theta <= dim.theta_init)) {
    throw DomainError("linkage angle " + FormatNumber(state.theta) +
                      " outside [theta_end, theta_init] = [" +
                      FormatNumber(dim.theta_end) + ", " +
                      FormatNumber(dim.theta_init) + "]");
  }
  const double sign =
      state.config == BaseConfig::kBackwardBase ? 1.0 : -1.0;
  const double gravity_term =
      sign * state.g_tool * std::cos(state.alpha) * std::tan(state.theta) / 2.0;
  const double torque = SpringTorque(spring, dim.theta_init - state.theta);
  return gravity_term + 2.0 * dim.v * torque / (dim.r * cos_theta);
}

}  // namespace gripper_tool
