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

// Heaviest object the tool can carry while held in the gripper.
//
// With the object weight x and the contacts sharing the load equally, the
// tool is in balance when
//
//   2 f - G - x = 0
//   G d_com cos(alpha) + 2 T - x d_obj sin(alpha) = 0,
//
// and the grasp holds while (f, T) stays inside the soft-finger limit
// surface. Substituting gives a convex quadratic a x^2 + b x + c <= 0 whose
// upper root is the maximum payload.

#ifndef GRIPPER_TOOL_PAYLOAD_H_
#define GRIPPER_TOOL_PAYLOAD_H_

#include <optional>
#include <span>
#include <vector>

#include "gripper_tool/contact.h"

namespace gripper_tool {

struct ObjectSpec {
  double g_obj = 0.0;  // N
  double d_obj = 0.0;  // contact-to-grasp-line moment arm, m
};

struct QuadraticCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double Evaluate(double x) const { return (a * x + b) * x + c; }
};

// The a, b, c expressions exactly as published for this tool, with
// max T = e mu Fn. They use the grasp offset d rather than d_com and do not
// agree with the balance equations above; kept for comparison only.
// Throws DegenerateContactError when max T = 0.
QuadraticCoefficients PublishedPayloadCoefficients(const ContactModel& model,
                                                   const GraspState& state,
                                                   double d_obj);

// Coefficients of the quadratic obtained from the balance equations and the
// limit surface. This is the one MaxPayload solves.
QuadraticCoefficients EquilibriumPayloadCoefficients(const ContactModel& model,
                                                     const GraspState& state,
                                                     double d_obj);

// Stable roots of a x^2 + b x + c = 0 (a > 0) with nonnegative
// discriminant, lower root first. Avoids cancellation in -b + sqrt(disc).
struct QuadraticRoots {
  double lower = 0.0;
  double upper = 0.0;
};
std::optional<QuadraticRoots> SolveQuadratic(const QuadraticCoefficients& q);

enum class PayloadStatus {
  kOk,
  // Holding the bare tool needs a counterweight: payloads below min_weight
  // are infeasible.
  kNeedsMinimumLoad,
  // Even the upper root is negative, so no nonnegative payload is feasible
  // (the tool itself cannot be held at this pose). max_weight is 0.
  kToolUnsupported,
};

struct PayloadResult {
  double max_weight = 0.0;  // N
  double min_weight = 0.0;  // N; > 0 only with kNeedsMinimumLoad
  QuadraticCoefficients coefficients;
  // |a x^2 + b x + c| / max(|a x^2|, |b x|, |c|, 1) at the upper root.
  double residual = 0.0;
  PayloadStatus status = PayloadStatus::kOk;
  // Upper root of the published quadratic, when it has real roots.
  std::optional<double> published_root;
};

// Maximum object weight. Throws NoFeasiblePayloadError when 2 mu Fn < G or
// the quadratic has no real root, DegenerateContactError when max T = 0.
PayloadResult MaxPayload(const ContactModel& model, const GraspState& state,
                         double d_obj);

struct PayloadCell {
  double alpha = 0.0;
  double d = 0.0;
  // Empty when MaxPayload throws or reports kToolUnsupported.
  std::optional<PayloadResult> result;
};

// Evaluates MaxPayload on the alphas x ds grid, alpha outer and d inner. Each
// cell sets both the grasp offset d and the moment arm d_com to the grid d.
// Output order is the grid order regardless of `jobs`.
std::vector<PayloadCell> PayloadSweep(const ContactModel& model,
                                      const GraspState& state_template,
                                      double d_obj,
                                      std::span<const double> alphas,
                                      std::span<const double> ds,
                                      int jobs = 1);

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_PAYLOAD_H_
