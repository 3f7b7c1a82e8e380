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

#include "gripper_tool/pose.h"

#include <cmath>
#include <numbers>

#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"
#include "gripper_tool/parallel.h"

namespace gripper_tool {

double TorqueMargin(const ContactModel& model, const GraspState& state,
                    double gamma) {
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2)) {
    throw DomainError("hand-tool angle " + FormatNumber(gamma) +
                      " outside [0, pi/2]");
  }
  const double tangential = 0.5 * state.g_tool * std::cos(gamma);
  const double max_f = MaxCapacities(model, state.f_n).max_f;
  if (tangential > max_f) {
    throw ZeroCapacityError("tangential load " + FormatNumber(tangential) +
                            " N exceeds friction capacity " +
                            FormatNumber(max_f) + " N");
  }
  const double available =
      2.0 * model.e * std::sqrt(max_f * max_f - tangential * tangential);
  return available - state.g_tool * state.d_com * std::sin(gamma);
}

TorqueMarginCurve GammaSweep(const ContactModel& model,
                             const GraspState& state, int n_samples,
                             int jobs) {
  if (n_samples < 2) {
    throw DomainError("gamma sweep needs at least 2 samples, got " +
                      std::to_string(n_samples));
  }
  const double step = (std::numbers::pi / 2) / (n_samples - 1);
  TorqueMarginCurve curve;
  curve.samples.resize(n_samples);
  ParallelFor(curve.samples.size(), jobs, [&](std::size_t i) {
    MarginSample& s = curve.samples[i];
    s.gamma = static_cast<int>(i) == n_samples - 1 ? std::numbers::pi / 2
                                                   : step * static_cast<double>(i);
    try {
      s.margin = TorqueMargin(model, state, s.gamma);
    } catch (const DomainError&) {
    }
  });

  bool found = false;
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const auto& m = curve.samples[i].margin;
    if (m && (!found || *m > *curve.samples[curve.peak_index].margin)) {
      curve.peak_index = i;
      found = true;
    }
  }
  if (!found) {
    throw ZeroCapacityError(
        "no hand-tool angle leaves any friction torque capacity");
  }

  const std::size_t k = curve.peak_index;
  curve.peak_gamma = curve.samples[k].gamma;
  curve.peak_margin = *curve.samples[k].margin;
  if (k > 0 && k + 1 < curve.samples.size() && curve.samples[k - 1].margin &&
      curve.samples[k + 1].margin) {
    const double left = *curve.samples[k - 1].margin;
    const double mid = curve.peak_margin;
    const double right = *curve.samples[k + 1].margin;
    const double curvature = left - 2.0 * mid + right;
    if (curvature < 0.0) {
      const double offset = 0.5 * (left - right) / curvature;  // in steps
      curve.peak_gamma += offset * step;
      curve.peak_margin = mid - 0.25 * (left - right) * offset;
    }
  }
  return curve;
}

}  // namespace gripper_tool
