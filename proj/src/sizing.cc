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

#include "gripper_tool/sizing.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"
#include "gripper_tool/parallel.h"

namespace gripper_tool {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Relative slack for boundary comparisons (boundaries count as satisfied).
constexpr double kBoundarySlack = 1e-12;
// Relative distance within which a constraint is reported as active.
constexpr double kActiveTolerance = 1e-9;

constexpr int kCoarseM = 17;
constexpr int kCoarseTheta = 129;
constexpr int kBisectionSteps = 80;

struct Margin {
  const char* name;
  double margin;  // lhs - rhs
  double scale;   // magnitude used for relative tolerances
  bool strict = false;

  bool Violated() const {
    if (std::isnan(margin)) return true;
    return strict ? margin <= 0.0 : margin < -kBoundarySlack * scale;
  }
  bool Active() const {
    return !Violated() && std::isfinite(margin) &&
           std::abs(margin) <= kActiveTolerance * scale;
  }
};

Margin MakeMargin(const char* name, double lhs, double rhs,
                  bool strict = false) {
  return {name, lhs - rhs,
          std::max({std::abs(lhs), std::abs(rhs), 1e-300}), strict};
}

std::vector<Margin> GeometryMargins(const ToolDimensions& dim) {
  const double q = ShaftClearance(dim.d_axis, dim.r_edge);
  std::vector<Margin> out;
  out.push_back(MakeMargin("base_width", dim.m, q));
  if (q > dim.r) {
    // theta_end_min does not exist; report the length shortfall instead.
    out.push_back(MakeMargin("theta_end_min", dim.r, q));
  } else {
    out.push_back(
        MakeMargin("theta_end_min", dim.theta_end, std::asin(q / dim.r)));
  }
  out.push_back(
      MakeMargin("parallel_clearance", dim.p, dim.k * std::sin(dim.theta_end)));
  out.push_back(MakeMargin(
      "frame_height", dim.h,
      dim.r * std::cos(dim.theta_end) + std::tan(dim.theta_end) * q));
  out.push_back(MakeMargin("transmission_singularity", kHalfPi,
                           dim.theta_init, /*strict=*/true));
  return out;
}

std::vector<Margin> ProblemMargins(const SizingProblem& problem,
                                   const ToolDimensions& dim) {
  std::vector<Margin> out = GeometryMargins(dim);
  const SizingBounds& b = problem.bounds;
  out.push_back(MakeMargin("m_min", dim.m, b.m_min));
  out.push_back(MakeMargin("m_max", b.m_max, dim.m));
  out.push_back(MakeMargin("r_min", dim.r, b.r_min));
  out.push_back(MakeMargin("r_max", b.r_max, dim.r));
  out.push_back(MakeMargin("theta_init_min", dim.theta_init, b.theta_init_min));
  out.push_back(MakeMargin("theta_init_max", b.theta_init_max, dim.theta_init));
  out.push_back(MakeMargin("theta_end_order", dim.theta_init, dim.theta_end,
                           /*strict=*/true));
  double peak = std::numeric_limits<double>::infinity();
  try {
    peak = PeakGripForce(dim, problem.spring, problem.grasp);
  } catch (const DomainError&) {
  }
  Margin budget = MakeMargin("grip_budget", problem.grip_budget, peak);
  if (std::isinf(problem.grip_budget)) budget.margin = problem.grip_budget;
  if (std::isinf(peak)) budget.margin = -std::numeric_limits<double>::infinity();
  out.push_back(budget);
  return out;
}

std::vector<Violation> ToViolations(const std::vector<Margin>& margins) {
  std::vector<Violation> out;
  for (const Margin& m : margins) {
    if (m.Violated()) out.push_back({m.name, m.margin});
  }
  return out;
}

struct Candidate {
  double m = 0.0;
  double theta_init = 0.0;
  double theta_end = 0.0;
  double stroke = 0.0;
};

// True when `a` should replace `b` as the incumbent.
bool Better(const Candidate& a, const std::optional<Candidate>& b) {
  if (!b) return true;
  if (a.stroke != b->stroke) return a.stroke > b->stroke;
  if (a.theta_init != b->theta_init) return a.theta_init < b->theta_init;
  return a.m < b->m;
}

class StrokeSearch {
 public:
  explicit StrokeSearch(const SizingProblem& problem)
      : problem_(problem),
        q_(ShaftClearance(problem.d_axis, problem.r_edge)) {}

  bool WithinBudget(double m, double theta_init, double theta_end) const {
    if (std::isinf(problem_.grip_budget) && problem_.grip_budget > 0.0) {
      return true;
    }
    const ToolDimensions dim =
        ComposeDimensions(problem_, m, theta_init, theta_end);
    try {
      return PeakGripForce(dim, problem_.spring, problem_.grasp) <=
             problem_.grip_budget;
    } catch (const DomainError&) {
      return false;
    }
  }

  // Best closing angle for fixed (m, theta_init): the smallest admissible
  // one, since the stroke shrinks as theta_end grows.
  std::optional<Candidate> AtPoint(double m, double theta_init) const {
    const SizingBounds& b = problem_.bounds;
    if (!(theta_init > 0.0 && theta_init < kHalfPi)) return std::nullopt;
    const double r = (problem_.w_init - m) / (2.0 * std::sin(theta_init));
    const double slack = kBoundarySlack;
    if (r < b.r_min * (1 - slack) || r > b.r_max * (1 + slack)) {
      return std::nullopt;
    }
    if (m < q_ * (1 - slack) || q_ > r) return std::nullopt;
    const double theta_end_min = std::asin(q_ / r);
    if (theta_end_min >= theta_init) return std::nullopt;

    double theta_end = theta_end_min;
    if (!WithinBudget(m, theta_init, theta_end)) {
      // The spring deflection shrinks as theta_end approaches theta_init.
      if (!WithinBudget(m, theta_init, theta_init)) return std::nullopt;
      double lo = theta_end_min;
      double hi = theta_init;
      for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (WithinBudget(m, theta_init, mid)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      theta_end = hi;
    }
    const double stroke = 2.0 * r * std::sin(theta_init - theta_end);
    if (!(stroke > 0.0)) return std::nullopt;
    return Candidate{m, theta_init, theta_end, stroke};
  }

  // Lowest admissible m for theta_init. Smaller m lengthens r, which both
  // lengthens the stroke and lowers the spring load.
  std::optional<Candidate> AtLowestM(double theta_init) const {
    const SizingBounds& b = problem_.bounds;
    const double s = std::sin(theta_init);
    const double w = problem_.w_init;
    double m_lo = std::max({b.m_min, q_, w - 2.0 * b.r_max * s});
    const double m_hi = std::min(b.m_max, w - 2.0 * b.r_min * s);
    if (m_lo > m_hi) {
      if (m_lo - m_hi > kBoundarySlack * w) return std::nullopt;
      m_lo = m_hi;
    }
    return AtPoint(m_lo, theta_init);
  }

 private:
  const SizingProblem& problem_;
  double q_;
};

double GridValue(double lo, double hi, int i, int n) {
  if (n <= 1 || lo == hi) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
}

}  // namespace

double ThetaEndMin(double r, double d_axis, double r_edge) {
  const double q = ShaftClearance(d_axis, r_edge);
  if (q > r) {
    throw GeometryError("shaft clearance d_axis + 2 r_edge = " +
                        FormatNumber(q) + " exceeds linkage length r = " +
                        FormatNumber(r));
  }
  return std::asin(q / r);
}

std::vector<Violation> CheckFeasible(const ToolDimensions& dim) {
  return ToViolations(GeometryMargins(dim));
}

void ValidateSizingProblem(const SizingProblem& problem) {
  auto fail = [](const std::string& what) {
    throw DomainError("SizingProblem invariant violated: " + what);
  };
  if (!(problem.d_axis > 0.0 && problem.r_edge > 0.0 && problem.k > 0.0 &&
        problem.w_init > 0.0 && problem.v > 0.0)) {
    fail("d_axis, r_edge, k, w_init and v must be > 0");
  }
  const SizingBounds& b = problem.bounds;
  if (!(b.m_min > 0.0 && b.m_min <= b.m_max)) fail("need 0 < m_min <= m_max");
  if (!(b.r_min > 0.0 && b.r_min <= b.r_max)) fail("need 0 < r_min <= r_max");
  if (!(b.theta_init_min > 0.0 && b.theta_init_min <= b.theta_init_max &&
        b.theta_init_max < kHalfPi)) {
    fail("need 0 < theta_init_min <= theta_init_max < pi/2");
  }
  if (!(problem.grip_budget > 0.0)) fail("grip_budget must be > 0");
  ValidateSpringSpec(problem.spring);
}

ToolDimensions ComposeDimensions(const SizingProblem& problem, double m,
                                 double theta_init, double theta_end) {
  ToolDimensions dim;
  dim.m = m;
  dim.theta_init = theta_init;
  dim.theta_end = theta_end;
  dim.d_axis = problem.d_axis;
  dim.r_edge = problem.r_edge;
  dim.q = ShaftClearance(problem.d_axis, problem.r_edge);
  dim.k = problem.k;
  dim.v = problem.v;
  dim.w_init = problem.w_init;
  dim.r = (problem.w_init - m) / (2.0 * std::sin(theta_init));
  dim.p = problem.k * std::sin(theta_end);
  dim.h = dim.r * std::cos(theta_end) + std::tan(theta_end) * dim.q;
  return dim;
}

double PeakGripForce(const ToolDimensions& dim, const SpringSpec& spring,
                     const GraspState& grasp) {
  GraspState state = grasp;
  double peak = -std::numeric_limits<double>::infinity();
  const int n = kGripBudgetSamples;
  for (int i = 0; i < n; ++i) {
    state.theta = GridValue(dim.theta_end, dim.theta_init, i, n);
    peak = std::max(peak, RequiredGripForce(dim, spring, state));
  }
  return peak;
}

std::vector<Violation> AssessCandidate(const SizingProblem& problem,
                                       const ToolDimensions& dim) {
  return ToViolations(ProblemMargins(problem, dim));
}

SizingResult MaximizeStroke(const SizingProblem& problem, int jobs) {
  ValidateSizingProblem(problem);
  const SizingBounds& b = problem.bounds;
  const StrokeSearch search(problem);

  // Coarse grid over (m, theta_init).
  std::vector<std::optional<Candidate>> coarse(kCoarseM * kCoarseTheta);
  ParallelFor(coarse.size(), jobs, [&](std::size_t index) {
    const int i = static_cast<int>(index) / kCoarseM;
    const int j = static_cast<int>(index) % kCoarseM;
    coarse[index] = search.AtPoint(
        GridValue(b.m_min, b.m_max, j, kCoarseM),
        GridValue(b.theta_init_min, b.theta_init_max, i, kCoarseTheta));
  });
  // Same theta_init grid with m pinned at its lowest admissible value.
  std::vector<std::optional<Candidate>> pinned(kCoarseTheta);
  ParallelFor(pinned.size(), jobs, [&](std::size_t i) {
    pinned[i] = search.AtLowestM(GridValue(
        b.theta_init_min, b.theta_init_max, static_cast<int>(i), kCoarseTheta));
  });

  std::optional<Candidate> best;
  int best_row = -1;
  for (std::size_t index = 0; index < coarse.size(); ++index) {
    if (coarse[index] && Better(*coarse[index], best)) {
      best = coarse[index];
      best_row = static_cast<int>(index) / kCoarseM;
    }
  }
  for (int i = 0; i < kCoarseTheta; ++i) {
    if (pinned[i] && Better(*pinned[i], best)) {
      best = pinned[i];
      best_row = i;
    }
  }

  if (!best) {
    // Report the violations at the coarse point that comes closest.
    std::vector<Violation> nearest;
    double nearest_score = std::numeric_limits<double>::infinity();
    const double q = ShaftClearance(problem.d_axis, problem.r_edge);
    for (int i = 0; i < kCoarseTheta; ++i) {
      for (int j = 0; j < kCoarseM; ++j) {
        const double m = GridValue(b.m_min, b.m_max, j, kCoarseM);
        const double ti =
            GridValue(b.theta_init_min, b.theta_init_max, i, kCoarseTheta);
        const double r = (problem.w_init - m) / (2.0 * std::sin(ti));
        const double te = q <= r ? std::min(std::asin(q / r), ti) : 0.0;
        const auto margins =
            ProblemMargins(problem, ComposeDimensions(problem, m, ti, te));
        double score = 0.0;
        for (const Margin& mg : margins) {
          if (mg.Violated()) score += 1.0 + std::min(1.0, -mg.margin / mg.scale);
        }
        if (score < nearest_score) {
          nearest_score = score;
          nearest = ToViolations(margins);
        }
      }
    }
    std::vector<std::string> names;
    std::string list;
    for (const Violation& v : nearest) {
      names.push_back(v.constraint);
      list += (list.empty() ? "" : ", ") + v.constraint;
    }
    throw InfeasibleProblemError(
        "no admissible dimensions within the bounds; binding at the nearest "
        "candidate: " + list,
        names);
  }

  // Golden-section refinement of theta_init around the best coarse row.
  double lo = GridValue(b.theta_init_min, b.theta_init_max,
                        std::max(best_row - 1, 0), kCoarseTheta);
  double hi = GridValue(b.theta_init_min, b.theta_init_max,
                        std::min(best_row + 1, kCoarseTheta - 1), kCoarseTheta);
  auto value = [&](double ti) {
    const auto c = search.AtLowestM(ti);
    return c ? c->stroke : -std::numeric_limits<double>::infinity();
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = value(x1);
  double f2 = value(x2);
  while (hi - lo > 1e-13) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = value(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = value(x2);
    }
  }
  for (double ti : {lo, 0.5 * (lo + hi), hi}) {
    if (const auto c = search.AtLowestM(ti); c && Better(*c, best)) best = c;
  }

  SizingResult result;
  result.dims =
      ComposeDimensions(problem, best->m, best->theta_init, best->theta_end);
  result.stroke = Stroke(result.dims);
  const auto margins = ProblemMargins(problem, result.dims);
  if (const auto violations = ToViolations(margins); !violations.empty()) {
    throw DomainError("internal: optimizer produced an inadmissible design (" +
                      violations.front().constraint + ")");
  }
  for (const Margin& m : margins) {
    if (m.Active()) result.active_constraints.emplace_back(m.name);
  }
  return result;
}

}  // namespace gripper_tool
