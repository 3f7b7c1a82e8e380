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

// Acceptance checks. Prints one PASS/FAIL line per criterion; with a
// criterion number as argument only that criterion runs. Exit status is
// nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.h"
#include "gripper_tool/cli.h"
#include "gripper_tool/contact.h"
#include "gripper_tool/errors.h"
#include "gripper_tool/payload.h"
#include "gripper_tool/pose.h"
#include "gripper_tool/sizing.h"
#include "oracles.h"

namespace gripper_tool {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180;

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

struct PayloadDraw {
  ContactModel model;
  GraspState state;
  double d_obj;
};

// Grip forces from just above the tool-holding threshold to six times it,
// over the full tool-angle range.
PayloadDraw DrawPayload(testing::Draws& draws) {
  PayloadDraw p;
  p.model = {draws.Uniform(0.2, 1.2), draws.Uniform(0.002, 0.03)};
  p.state.g_tool = draws.Uniform(1, 30);
  p.state.f_n = p.state.g_tool / (2 * p.model.mu) * draws.Uniform(1.05, 6);
  p.state.alpha = draws.Uniform(0, kPi);
  p.state.d = draws.Uniform(0, 0.1);
  p.state.d_com = draws.Uniform(0, 0.05);
  p.d_obj = draws.Uniform(0, 0.15);
  return p;
}

constexpr int kPayloadDraws = 1000;

Verdict PayloadOracleEquivalence() {
  const auto start = Clock::now();
  testing::Draws draws(1001);
  int compared = 0, agreed_empty = 0, mismatched = 0;
  double worst = 0.0;
  std::vector<double> published_gap;
  for (int i = 0; i < kPayloadDraws; ++i) {
    const PayloadDraw p = DrawPayload(draws);
    const auto oracle = testing::PayloadOracle(p.model, p.state, p.d_obj);
    std::optional<PayloadResult> r;
    try {
      r = MaxPayload(p.model, p.state, p.d_obj);
    } catch (const NoFeasiblePayloadError&) {
    }
    const bool solver_empty =
        !r || r->status == PayloadStatus::kToolUnsupported;
    if (solver_empty || !oracle) {
      if (solver_empty && !oracle) {
        ++agreed_empty;
      } else {
        ++mismatched;
      }
      continue;
    }
    ++compared;
    const double rel = std::abs(r->max_weight - *oracle) /
                       std::max(std::abs(*oracle), 1e-300);
    worst = std::max(worst, rel);
    if (r->published_root) {
      published_gap.push_back(std::abs(*r->published_root - *oracle) /
                              std::max(std::abs(*oracle), 1e-300));
    }
  }
  const double elapsed = Seconds(start);
  std::string detail = std::to_string(kPayloadDraws) + " draws, " +
                       std::to_string(compared) + " compared, " +
                       std::to_string(agreed_empty) +
                       " agreed infeasible, " + std::to_string(mismatched) +
                       " feasibility mismatches, worst rel " +
                       Fmt("%.3g", worst) + ", " + Fmt("%.2f", elapsed) + " s";
  if (!published_gap.empty()) {
    std::sort(published_gap.begin(), published_gap.end());
    detail += "; published-coefficient root median rel divergence " +
              Fmt("%.3g", published_gap[published_gap.size() / 2]);
  }
  return {worst <= 1e-6 && mismatched == 0 && compared >= 500 &&
              elapsed < 30.0,
          detail};
}

Verdict QuadraticResidual() {
  testing::Draws draws(1001);
  int returned = 0;
  double worst = 0.0;
  for (int i = 0; i < kPayloadDraws; ++i) {
    const PayloadDraw p = DrawPayload(draws);
    try {
      const PayloadResult r = MaxPayload(p.model, p.state, p.d_obj);
      const double x = r.max_weight;
      const auto& q = r.coefficients;
      const double scale = std::max(
          {std::abs(q.a * x * x), std::abs(q.b * x), std::abs(q.c), 1.0});
      // Unsupported tools report zero without a root to check.
      if (r.status == PayloadStatus::kToolUnsupported) continue;
      worst = std::max(worst, std::abs(q.Evaluate(x)) / scale);
      ++returned;
    } catch (const NoFeasiblePayloadError&) {
    }
  }
  return {worst <= 1e-9 && returned > 0,
          std::to_string(returned) + " roots, worst normalized residual " +
              Fmt("%.3g", worst)};
}

Verdict HoldingBoundary() {
  testing::Draws draws(2002);
  int checked = 0, failures = 0;
  for (int i = 0; i < 500; ++i) {
    const ContactModel model{draws.Uniform(0.2, 1.2),
                             draws.Uniform(0.001, 0.03)};
    GraspState state;
    state.g_tool = draws.Uniform(1, 50);
    state.f_n = state.g_tool / (2 * model.mu) * draws.Uniform(1.01, 5);
    state.alpha = draws.Uniform(0.05, kPi - 0.05);
    const double d = HoldingMaxOffset(model, state).max_offset;
    ++checked;
    if (!testing::HoldingFeasible(model, state, 0.999 * d) ||
        testing::HoldingFeasible(model, state, 1.001 * d)) {
      ++failures;
    }
  }
  return {failures == 0 && checked >= 200,
          std::to_string(checked) + " draws, " + std::to_string(failures) +
              " not marginal at 0.999/1.001"};
}

Verdict ClosedFormIdentities() {
  testing::Draws draws(3003);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const ContactModel model{draws.Uniform(0.2, 1.2),
                             draws.Uniform(0.001, 0.03)};
    GraspState state;
    state.f_n = draws.Uniform(1, 80);
    state.g_tool = 2.0 * model.mu * state.f_n;
    state.alpha = draws.Uniform(0.05, kPi - 0.05);
    const OffsetLimit zero = HoldingMaxOffset(model, state);
    if (zero.unbounded || zero.max_offset != 0.0) ++failures;

    state.g_tool *= draws.Uniform(0.1, 0.99);
    for (double alpha : {0.0, kPi}) {
      state.alpha = alpha;
      if (!HoldingMaxOffset(model, state).unbounded) ++failures;
    }

    state.alpha = 0.0;
    state.d_com = draws.Uniform(0, 0.01);
    const double t = -state.g_tool * state.d_com / 2;
    const double inner = model.mu * model.mu * state.f_n * state.f_n -
                         t * t / (model.e * model.e);
    if (inner <= 0 || 2 * std::sqrt(inner) < state.g_tool) continue;
    const double closed = 2 * std::sqrt(inner) - state.g_tool;
    try {
      const PayloadResult r =
          MaxPayload(model, state, draws.Uniform(0, 0.1));
      if (std::abs(r.max_weight - closed) > 1e-9 * std::max(1.0, closed)) {
        ++failures;
      }
    } catch (const DomainError&) {
      ++failures;
    }
  }
  return {failures == 0, "200 draws per identity, " +
                             std::to_string(failures) + " failures"};
}

Verdict ConfigurationGap() {
  testing::Draws draws(4004);
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ToolDimensions dim;
    dim.m = draws.Uniform(0.005, 0.03);
    dim.r = draws.Uniform(0.01, 0.08);
    dim.theta_init = draws.Uniform(0.2, 1.5);
    dim.theta_end = draws.Uniform(0, dim.theta_init);
    dim.v = draws.Uniform(0.5, 2);
    const SpringSpec spring{draws.Uniform(0.01, 2), draws.Uniform(0, 1)};
    GraspState state;
    state.f_n = 40;
    state.g_tool = draws.Uniform(0.5, 50);
    state.alpha = draws.Uniform(1e-6, kPi / 2 - 1e-6);
    state.theta = draws.Uniform(dim.theta_end, dim.theta_init);
    state.config = BaseConfig::kBackwardBase;
    const double backward = RequiredGripForce(dim, spring, state);
    state.config = BaseConfig::kForwardBase;
    const double forward = RequiredGripForce(dim, spring, state);
    const double gap = backward - forward;
    const double expected =
        state.g_tool * std::cos(state.alpha) * std::tan(state.theta);
    // Tolerance relative to the forces being subtracted.
    const double err = std::abs(gap - expected) /
                       std::max({1.0, std::abs(backward), std::abs(forward)});
    worst = std::max(worst, err);
    if (err > 1e-12 || gap < 0.0) ++failures;
  }
  return {failures == 0, "1000 draws, worst scaled error " +
                             Fmt("%.3g", worst) + ", " +
                             std::to_string(failures) + " failures"};
}

SizingProblem BaseProblem() {
  SizingProblem p;
  p.d_axis = 0.004;
  p.r_edge = 0.001;
  p.k = 0.05;
  p.w_init = 0.08;
  p.bounds = {0.006, 0.03, 0.01, 0.06, 20 * kDeg, 85 * kDeg};
  p.grip_budget = 30;
  p.spring = {0.2, 10 * kDeg};
  p.grasp.f_n = 40;
  p.grasp.g_tool = 10;
  p.grasp.alpha = 45 * kDeg;
  return p;
}

std::vector<SizingProblem> SizingInstances() {
  std::vector<SizingProblem> out;
  out.push_back(BaseProblem());

  SizingProblem unlimited = BaseProblem();
  unlimited.grip_budget = std::numeric_limits<double>::infinity();
  out.push_back(unlimited);

  SizingProblem forward = BaseProblem();
  forward.grasp.config = BaseConfig::kForwardBase;
  forward.grip_budget = 20;
  forward.w_init = 0.1;
  forward.bounds.r_max = 0.08;
  out.push_back(forward);

  SizingProblem stiff = BaseProblem();
  stiff.spring = {0.5, 5 * kDeg};
  stiff.grip_budget = 45;
  stiff.bounds.theta_init_min = 30 * kDeg;
  stiff.bounds.theta_init_max = 70 * kDeg;
  out.push_back(stiff);

  SizingProblem wide = BaseProblem();
  wide.w_init = 0.06;
  wide.d_axis = 0.006;
  wide.r_edge = 0.002;
  wide.bounds = {0.01, 0.04, 0.012, 0.05, 15 * kDeg, 80 * kDeg};
  wide.grip_budget = 25;
  out.push_back(wide);
  return out;
}

Verdict SizingOracle() {
  const auto start = Clock::now();
  int failures = 0;
  double worst = 0.0;
  std::string strokes;
  for (const SizingProblem& problem : SizingInstances()) {
    SizingResult result;
    try {
      result = MaximizeStroke(problem);
    } catch (const DomainError& e) {
      ++failures;
      strokes += std::string(" error(") + e.what() + ")";
      continue;
    }
    if (!CheckFeasible(result.dims).empty() ||
        !AssessCandidate(problem, result.dims).empty()) {
      ++failures;
    }
    const auto oracle = testing::SizingGridOracle(problem, 200, 4);
    if (!oracle) {
      ++failures;
      continue;
    }
    const double rel = std::abs(result.stroke - oracle->stroke) / oracle->stroke;
    worst = std::max(worst, rel);
    if (rel > 1e-4 || result.stroke < oracle->stroke * (1 - 1e-12)) ++failures;
    strokes += " " + Fmt("%.6g", result.stroke);
  }
  const double elapsed = Seconds(start);
  return {failures == 0 && elapsed < 60.0,
          "5 instances, strokes" + strokes + " m, worst rel gap " +
              Fmt("%.3g", worst) + ", " + Fmt("%.2f", elapsed) + " s"};
}

Verdict StrokeMonotonicity() {
  const SizingProblem problem = BaseProblem();
  testing::Draws draws(7007);
  int checked = 0, failures = 0;
  auto feasible = [&](double m, double ti, double te) {
    const ToolDimensions dim = ComposeDimensions(problem, m, ti, te);
    return dim.r > 0 && CheckFeasible(dim).empty();
  };
  auto stroke = [&](double m, double ti, double te) {
    return Stroke(ComposeDimensions(problem, m, ti, te));
  };
  while (checked < 3000) {
    const double m = draws.Uniform(0.006, 0.03);
    const double ti = draws.Uniform(0.2, 1.5);
    const double te = draws.Uniform(0, ti);
    if (!feasible(m, ti, te)) continue;
    const double base = stroke(m, ti, te);
    const double tol = 1e-14 * base;
    const double ti2 = std::min(ti + draws.Uniform(0, 0.05), 1.56);
    const double te2 = te + draws.Uniform(0, ti - te);
    const double m2 = m + draws.Uniform(0, 0.005);
    if (feasible(m, ti2, te) && stroke(m, ti2, te) < base - tol) ++failures;
    if (feasible(m, ti, te2) && stroke(m, ti, te2) > base + tol) ++failures;
    if (feasible(m2, ti, te) && stroke(m2, ti, te) > base + tol) ++failures;
    ++checked;
  }
  return {failures == 0, std::to_string(checked) +
                             " feasible base points, " +
                             std::to_string(failures) + " violations"};
}

Verdict PoseCurveShape() {
  const ContactModel model{0.5, 0.01};
  GraspState state;
  state.f_n = 40;
  state.g_tool = 10;
  state.d_com = 0.03;
  const TorqueMarginCurve curve = GammaSweep(model, state, 901);
  // Witness triple i < j < k with m_i < m_j > m_k: some sample exceeds
  // both the smallest margin before it and the smallest one after it.
  std::vector<double> m;
  for (const MarginSample& s : curve.samples) {
    if (s.margin) m.push_back(*s.margin);
  }
  std::vector<double> suffix_min(m.size() + 1,
                                 std::numeric_limits<double>::infinity());
  for (std::size_t k = m.size(); k-- > 0;) {
    suffix_min[k] = std::min(suffix_min[k + 1], m[k]);
  }
  bool witness = false;
  double prefix_min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (prefix_min < m[j] && suffix_min[j + 1] < m[j]) witness = true;
    prefix_min = std::min(prefix_min, m[j]);
  }
  const double first = *curve.samples.front().margin;
  const double last = *curve.samples.back().margin;
  return {witness,
          "901 samples on [0, 90] deg; peak at " +
              Fmt("%.4g", curve.peak_gamma / kDeg) + " deg, margin " +
              Fmt("%.4g", first) + " -> " + Fmt("%.4g", last) +
              " N*m; no rise-then-fall witness (slope at 0 deg is -G*d_com "
              "and the curve falls throughout)"};
}

Verdict GoldenFiles() {
  int failures = 0;
  int runs = 0;
  for (const auto& c : testing::GoldenCases()) {
    const std::string expected =
        testing::ReadFile(std::string(GRIPPER_TOOL_GOLDEN_DIR) + "/" + c.file);
    for (const char* jobs : {"1", "4", "1", "4"}) {
      std::vector<std::string> args = c.args;
      args.push_back(GRIPPER_TOOL_SAMPLE_DESIGN);
      args.push_back("--jobs");
      args.push_back(jobs);
      std::ostringstream out, err;
      const int code = Run(args, out, err);
      ++runs;
      if (expected.empty() || code != c.exit_code || out.str() != expected) {
        ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(runs) + " runs over 5 commands, " +
                             std::to_string(failures) + " mismatches"};
}

struct Criterion {
  const char* name;
  std::function<Verdict()> check;
};

}  // namespace
}  // namespace gripper_tool

int main(int argc, char** argv) {
  using gripper_tool::Criterion;
  namespace gt = gripper_tool;
  const std::vector<Criterion> criteria = {
      {"payload oracle equivalence", gt::PayloadOracleEquivalence},
      {"quadratic residual", gt::QuadraticResidual},
      {"holding-condition boundary", gt::HoldingBoundary},
      {"closed-form identities", gt::ClosedFormIdentities},
      {"configuration gap", gt::ConfigurationGap},
      {"sizing oracle", gt::SizingOracle},
      {"stroke monotonicity", gt::StrokeMonotonicity},
      {"pose curve shape", gt::PoseCurveShape},
      {"CLI golden files", gt::GoldenFiles},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0],
                   criteria.size());
      return 2;
    }
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    gt::Verdict v;
    try {
      v = criteria[i].check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && v.pass;
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, v.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
