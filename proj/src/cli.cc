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

#include "gripper_tool/cli.h"

#include <charconv>
#include <cmath>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "gripper_tool/contact.h"
#include "gripper_tool/design_file.h"
#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"
#include "gripper_tool/mechanism.h"
#include "gripper_tool/payload.h"
#include "gripper_tool/pose.h"
#include "gripper_tool/sizing.h"

namespace gripper_tool {
namespace {

constexpr const char* kInfeasible = "INFEASIBLE";
constexpr std::size_t kMaxRangePoints = 10'000'000;

double ParseRangeNumber(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw UsageError("malformed range '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view PayloadStatusName(PayloadStatus status) {
  switch (status) {
    case PayloadStatus::kOk:
      return "ok";
    case PayloadStatus::kNeedsMinimumLoad:
      return "needs_minimum_load";
    case PayloadStatus::kToolUnsupported:
      return "tool_unsupported";
  }
  return "unknown";
}

struct Options {
  std::string design_path;
  int jobs = 1;
  std::string alpha_range;
  std::string d_range;
  std::optional<double> d_obj;
  int samples = 91;
};

int Validate(const DesignFile& design, std::ostream& out) {
  const auto violations = CheckFeasible(design.tool);
  out << "status=" << (violations.empty() ? "feasible" : "infeasible") << '\n';
  out << "violations=" << violations.size() << '\n';
  for (const Violation& v : violations) {
    out << "violation=" << v.constraint << " margin=" << FormatNumber(v.margin)
        << '\n';
  }
  return violations.empty() ? kExitOk : kExitDomainError;
}

double RequireObjectArm(const DesignFile& design, const Options& options) {
  if (options.d_obj) {
    if (!(*options.d_obj >= 0.0)) throw UsageError("--d-obj must be >= 0");
    return *options.d_obj;
  }
  if (design.d_obj) return *design.d_obj;
  throw UsageError(
      "object moment arm unknown: add [object] d_obj to the design file or "
      "pass --d-obj");
}

int Analyze(const DesignFile& design, const Options& options,
            std::ostream& out, std::ostream& err) {
  const double d_obj = RequireObjectArm(design, options);
  int status = kExitOk;
  // Runs one analysis line; domain errors print the sentinel and mark the
  // run as failed without stopping the remaining lines.
  auto line = [&](const char* key, const std::function<std::string()>& fn) {
    try {
      const std::string value = fn();
      out << key << '=' << value << '\n';
    } catch (const DomainError& e) {
      out << key << '=' << kInfeasible << '\n';
      err << "error: " << key << ": " << e.what() << '\n';
      status = kExitDomainError;
    }
  };

  line("stroke_m", [&] { return FormatNumber(Stroke(design.tool)); });
  line("jaw_width_m",
       [&] { return FormatNumber(JawWidth(design.tool, design.grasp.theta)); });
  line("holding_max_offset_m", [&] {
    const OffsetLimit limit = HoldingMaxOffset(design.contact, design.grasp);
    return limit.unbounded ? std::string("unbounded")
                           : FormatNumber(limit.max_offset);
  });
  for (const BaseConfig config :
       {BaseConfig::kBackwardBase, BaseConfig::kForwardBase}) {
    const std::string key = "required_grip_force_" +
                            std::string(BaseConfigName(config)) + "_N";
    line(key.c_str(), [&] {
      GraspState state = design.grasp;
      state.config = config;
      return FormatNumber(RequiredGripForce(design.tool, design.spring, state));
    });
  }

  std::optional<PayloadResult> payload;
  line("max_payload_N", [&] {
    payload = MaxPayload(design.contact, design.grasp, d_obj);
    return FormatNumber(payload->max_weight);
  });
  if (payload) {
    out << "payload_status=" << PayloadStatusName(payload->status) << '\n';
    out << "payload_min_weight_N=" << FormatNumber(payload->min_weight) << '\n';
    out << "payload_residual=" << FormatNumber(payload->residual) << '\n';
    out << "published_payload_root_N="
        << (payload->published_root ? FormatNumber(*payload->published_root)
                                    : std::string(kInfeasible))
        << '\n';
  }
  return status;
}

int SweepPayload(const DesignFile& design, const Options& options,
                 std::ostream& out) {
  const std::vector<double> alphas = ParseRange(options.alpha_range, true);
  const std::vector<double> ds = ParseRange(options.d_range, false);
  const double d_obj = RequireObjectArm(design, options);
  const auto cells = PayloadSweep(design.contact, design.grasp, d_obj, alphas,
                                  ds, options.jobs);
  out << "alpha_deg,d_m,max_weight_N\n";
  for (const PayloadCell& cell : cells) {
    out << FormatNumber(ToDegrees(cell.alpha)) << ',' << FormatNumber(cell.d)
        << ','
        << (cell.result ? FormatNumber(cell.result->max_weight)
                        : std::string(kInfeasible))
        << '\n';
  }
  return kExitOk;
}

int Optimize(const DesignFile& design, const Options& options,
             std::ostream& out) {
  const SizingResult result =
      MaximizeStroke(MakeSizingProblem(design), options.jobs);
  const ToolDimensions& d = result.dims;
  out << "m=" << FormatNumber(d.m) << '\n';
  out << "r=" << FormatNumber(d.r) << '\n';
  out << "theta_init_deg=" << FormatNumber(ToDegrees(d.theta_init)) << '\n';
  out << "theta_end_deg=" << FormatNumber(ToDegrees(d.theta_end)) << '\n';
  out << "h=" << FormatNumber(d.h) << '\n';
  out << "p=" << FormatNumber(d.p) << '\n';
  out << "q=" << FormatNumber(d.q) << '\n';
  out << "k=" << FormatNumber(d.k) << '\n';
  out << "d_axis=" << FormatNumber(d.d_axis) << '\n';
  out << "r_edge=" << FormatNumber(d.r_edge) << '\n';
  out << "v=" << FormatNumber(d.v) << '\n';
  out << "w_init=" << FormatNumber(d.w_init) << '\n';
  out << "stroke=" << FormatNumber(result.stroke) << '\n';
  out << "active_constraints=";
  for (std::size_t i = 0; i < result.active_constraints.size(); ++i) {
    out << (i ? ";" : "") << result.active_constraints[i];
  }
  out << '\n';
  return kExitOk;
}

int SweepPose(const DesignFile& design, const Options& options,
              std::ostream& out) {
  if (options.samples < 2) throw UsageError("--samples must be >= 2");
  const TorqueMarginCurve curve =
      GammaSweep(design.contact, design.grasp, options.samples, options.jobs);
  out << "gamma_deg,margin_Nm\n";
  for (const MarginSample& s : curve.samples) {
    out << FormatNumber(ToDegrees(s.gamma)) << ','
        << (s.margin ? FormatNumber(*s.margin) : std::string(kInfeasible))
        << '\n';
  }
  out << "# peak_gamma_deg=" << FormatNumber(ToDegrees(curve.peak_gamma))
      << " peak_margin_Nm=" << FormatNumber(curve.peak_margin) << '\n';
  return kExitOk;
}

}  // namespace

std::vector<double> ParseRange(std::string_view text, bool angle) {
  const std::string_view whole = text;
  double scale = 1.0;
  if (text.ends_with("deg")) {
    if (!angle) {
      throw UsageError("range '" + std::string(whole) +
                       "' is a length; 'deg' suffix not allowed");
    }
    text.remove_suffix(3);
    scale = kDegToRad;
  }
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 1 && parts.size() != 3) {
    throw UsageError("malformed range '" + std::string(whole) +
                     "', expected start:stop:step");
  }
  const double first = ParseRangeNumber(parts[0], whole);
  if (parts.size() == 1) return {first * scale};

  const double stop = ParseRangeNumber(parts[1], whole);
  const double step = ParseRangeNumber(parts[2], whole);
  if (!(step > 0.0)) {
    throw UsageError("range '" + std::string(whole) + "' needs step > 0");
  }
  if (stop < first) {
    throw UsageError("range '" + std::string(whole) + "' has stop < start");
  }
  const double steps = (stop - first) / step;
  if (steps + 1 > static_cast<double>(kMaxRangePoints)) {
    throw UsageError("range '" + std::string(whole) + "' is too large");
  }
  const double nearest = std::round(steps);
  const bool lands =
      std::abs(first + nearest * step - stop) <=
      1e-12 * std::max({std::abs(stop), std::abs(first), step});
  const auto count = static_cast<std::size_t>(lands ? nearest
                                                    : std::floor(steps)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = (first + static_cast<double>(i) * step) * scale;
  }
  if (lands) values.back() = stop * scale;
  return values;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quasi-static design analysis of a double-parallelogram "
               "gripper tool",
               "gripper-tool"};
  app.require_subcommand(1);
  Options options;

  auto add_common = [&options](CLI::App* sub) {
    sub->add_option("design", options.design_path, "Design file (INI)")
        ->required();
    sub->add_option("--jobs", options.jobs, "Worker threads for sweeps")
        ->check(CLI::Range(1, 256));
  };

  CLI::App* validate =
      app.add_subcommand("validate", "Report interference-constraint margins");
  add_common(validate);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Holding limit, grip forces and maximum payload");
  add_common(analyze);
  analyze->add_option("--d-obj", options.d_obj, "Object moment arm, m");

  CLI::App* payload = app.add_subcommand(
      "payload-sweep", "Maximum payload over tool angle and grasp offset (CSV)");
  add_common(payload);
  payload->add_option("--alpha", options.alpha_range,
                      "Tool angles start:stop:step[deg]")
      ->required();
  payload->add_option("--d", options.d_range, "Grasp offsets start:stop:step, m")
      ->required();
  payload->add_option("--d-obj", options.d_obj, "Object moment arm, m");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Maximize the stroke within the [sizing] bounds");
  add_common(optimize);

  CLI::App* pose = app.add_subcommand(
      "pose-sweep", "Torque margin over the hand-tool angle (CSV)");
  add_common(pose);
  pose->add_option("--samples", options.samples,
                   "Uniform samples on [0, 90] deg");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    const DesignFile design = LoadDesign(options.design_path);
    if (validate->parsed()) return Validate(design, out);
    if (analyze->parsed()) return Analyze(design, options, out, err);
    if (payload->parsed()) return SweepPayload(design, options, out);
    if (optimize->parsed()) return Optimize(design, options, out);
    if (pose->parsed()) return SweepPose(design, options, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace gripper_tool
