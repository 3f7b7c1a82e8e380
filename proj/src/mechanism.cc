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

#include "gripper_tool/mechanism.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"

namespace gripper_tool {
namespace {

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw DomainError(std::string("ToolDimensions invariant violated: ") +
                      name + " must be > 0, got " + FormatNumber(value));
  }
}

}  // namespace

void ValidateToolDimensions(const ToolDimensions& dim) {
  RequirePositive(dim.m, "m");
  RequirePositive(dim.r, "r");
  RequirePositive(dim.h, "h");
  RequirePositive(dim.p, "p");
  RequirePositive(dim.q, "q");
  RequirePositive(dim.k, "k");
  RequirePositive(dim.d_axis, "d_axis");
  RequirePositive(dim.r_edge, "r_edge");
  RequirePositive(dim.v, "v");
  RequirePositive(dim.w_init, "w_init");
  if (!(dim.theta_end >= 0.0 && dim.theta_end < dim.theta_init &&
        dim.theta_init < std::numbers::pi / 2)) {
    throw DomainError(
        "ToolDimensions invariant violated: need 0 <= theta_end < "
        "theta_init < pi/2, got theta_end=" +
        FormatNumber(dim.theta_end) +
        " theta_init=" + FormatNumber(dim.theta_init));
  }
  const double width = dim.m + 2.0 * dim.r * std::sin(dim.theta_init);
  if (std::abs(width - dim.w_init) > kWidthTieTolerance * dim.w_init) {
    throw DomainError("ToolDimensions invariant violated: w_init=" +
                      FormatNumber(dim.w_init) +
                      " but m + 2 r sin(theta_init)=" + FormatNumber(width));
  }
  const double q = ShaftClearance(dim.d_axis, dim.r_edge);
  if (std::abs(q - dim.q) > kClearanceTieTolerance * q) {
    throw DomainError("ToolDimensions invariant violated: q=" +
                      FormatNumber(dim.q) +
                      " but d_axis + 2 r_edge=" + FormatNumber(q));
  }
}

void ValidateSpringSpec(const SpringSpec& spring) {
  if (!(spring.kappa > 0.0)) {
    throw DomainError("SpringSpec invariant violated: kappa must be > 0, got " +
                      FormatNumber(spring.kappa));
  }
  if (!(spring.beta >= 0.0)) {
    throw DomainError("SpringSpec invariant violated: beta must be >= 0, got " +
                      FormatNumber(spring.beta));
  }
}

double JawWidth(const ToolDimensions& dim, double theta) {
  if (!(theta >= dim.theta_end && theta <= dim.theta_init)) {
    throw DomainError("jaw angle " + FormatNumber(theta) +
                      " outside [theta_end, theta_init] = [" +
                      FormatNumber(dim.theta_end) + ", " +
                      FormatNumber(dim.theta_init) + "]");
  }
  return dim.m + 2.0 * dim.r * std::sin(theta);
}

double Stroke(const ToolDimensions& dim) {
  return 2.0 * dim.r * std::sin(dim.theta_init - dim.theta_end);
}

double FixedWidthStroke(double w_init, double m, double theta_init,
                        double theta_end) {
  const double r = (w_init - m) / (2.0 * std::sin(theta_init));
  return 2.0 * r * std::sin(theta_init - theta_end);
}

double SpringTorque(const SpringSpec& spring, double delta_theta) {
  if (!(delta_theta >= 0.0)) {
    throw DomainError("spring deflection must be >= 0, got " +
                      FormatNumber(delta_theta));
  }
  return spring.kappa * (spring.beta + delta_theta);
}

}  // namespace gripper_tool
