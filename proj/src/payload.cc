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

#include "gripper_tool/payload.h"

#include <algorithm>
#include <cmath>

#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"
#include "gripper_tool/parallel.h"

namespace gripper_tool {
namespace {

double RequireTorqueCapacity(const ContactModel& model, double f_n) {
  const double max_t = MaxCapacities(model, f_n).max_t;
  if (!(max_t > 0.0)) {
    throw DegenerateContactError(
        "contact has no torque capacity (e mu Fn = " + FormatNumber(max_t) +
        ")");
  }
  return max_t;
}

double NormalizedResidual(const QuadraticCoefficients& q, double x) {
  const double ax2 = q.a * x * x;
  const double bx = q.b * x;
  const double scale =
      std::max({std::abs(ax2), std::abs(bx), std::abs(q.c), 1.0});
  return std::abs(ax2 + bx + q.c) / scale;
}

}  // namespace

QuadraticCoefficients PublishedPayloadCoefficients(const ContactModel& model,
                                                   const GraspState& state,
                                                   double d_obj) {
  const double max_t = RequireTorqueCapacity(model, state.f_n);
  const double max_t_sq = max_t * max_t;
  const double mu_fn_sq = model.mu * model.mu * state.f_n * state.f_n;
  const double sin_sq = std::sin(state.alpha) * std::sin(state.alpha);
  const double g = state.g_tool;
  const double d = state.d;

  QuadraticCoefficients q;
  q.a = (1.0 + d_obj * d_obj * sin_sq * mu_fn_sq) / (4.0 * max_t_sq);
  q.b = mu_fn_sq * (g - d_obj * d * sin_sq) / (2.0 * max_t_sq);
  q.c = g * g * (max_t_sq + d * d * sin_sq * mu_fn_sq) / (4.0 * max_t_sq) -
        mu_fn_sq;
  return q;
}

QuadraticCoefficients EquilibriumPayloadCoefficients(const ContactModel& model,
                                                     const GraspState& state,
                                                     double d_obj) {
  RequireTorqueCapacity(model, state.f_n);
  // f = (G + x) / 2 and T = (x d_obj sin(alpha) - G d_com cos(alpha)) / 2
  // substituted into f^2 + T^2 / e^2 - mu^2 Fn^2 <= 0.
  const double g = state.g_tool;
  const double e_sq = model.e * model.e;
  const double object_arm = d_obj * std::sin(state.alpha);
  const double tool_arm = state.d_com * std::cos(state.alpha);
  const double mu_fn = model.mu * state.f_n;

  QuadraticCoefficients q;
  q.a = 0.25 + object_arm * object_arm / (4.0 * e_sq);
  q.b = 0.5 * g - g * tool_arm * object_arm / (2.0 * e_sq);
  q.c = 0.25 * g * g + g * g * tool_arm * tool_arm / (4.0 * e_sq) -
        mu_fn * mu_fn;
  return q;
}

std::optional<QuadraticRoots> SolveQuadratic(const QuadraticCoefficients& q) {
  const double disc = q.b * q.b - 4.0 * q.a * q.c;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double t = -0.5 * (q.b + std::copysign(sq, q.b));
  if (t == 0.0) {
    // b = 0 and disc = 0: double root at zero.
    return QuadraticRoots{0.0, 0.0};
  }
  const double r1 = t / q.a;
  const double r2 = q.c / t;
  return QuadraticRoots{std::min(r1, r2), std::max(r1, r2)};
}

PayloadResult MaxPayload(const ContactModel& model, const GraspState& state,
                         double d_obj) {
  const double g = state.g_tool;
  const double capacity = 2.0 * model.mu * state.f_n;
  if (g - capacity > 1e-12 * g) {
    throw NoFeasiblePayloadError(
        "no feasible payload: 2 mu Fn = " + FormatNumber(capacity) +
        " N cannot support the tool weight G = " + FormatNumber(g) + " N");
  }

  PayloadResult result;
  result.coefficients = EquilibriumPayloadCoefficients(model, state, d_obj);
  const auto roots = SolveQuadratic(result.coefficients);
  if (!roots) {
    throw NoFeasiblePayloadError(
        "no feasible payload: balance and contact limits cannot be met at "
        "alpha = " +
        FormatNumber(state.alpha) + " for any object weight");
  }
  result.residual = NormalizedResidual(result.coefficients, roots->upper);
  if (roots->upper < 0.0) {
    result.status = PayloadStatus::kToolUnsupported;
  } else {
    result.max_weight = roots->upper;
    if (roots->lower > 0.0) {
      result.status = PayloadStatus::kNeedsMinimumLoad;
      result.min_weight = roots->lower;
    }
  }

  if (const auto published =
          SolveQuadratic(PublishedPayloadCoefficients(model, state, d_obj))) {
    result.published_root = published->upper;
  }
  return result;
}

std::vector<PayloadCell> PayloadSweep(const ContactModel& model,
                                      const GraspState& state_template,
                                      double d_obj,
                                      std::span<const double> alphas,
                                      std::span<const double> ds, int jobs) {
  std::vector<PayloadCell> cells(alphas.size() * ds.size());
  ParallelFor(cells.size(), jobs, [&](std::size_t index) {
    PayloadCell& cell = cells[index];
    cell.alpha = alphas[index / ds.size()];
    cell.d = ds[index % ds.size()];
    GraspState state = state_template;
    state.alpha = cell.alpha;
    state.d = cell.d;
    state.d_com = cell.d;
    try {
      PayloadResult r = MaxPayload(model, state, d_obj);
      if (r.status != PayloadStatus::kToolUnsupported) cell.result = r;
    } catch (const DomainError&) {
      // Left empty; printed as the INFEASIBLE sentinel.
    }
  });
  return cells;
}

}  // namespace gripper_tool
