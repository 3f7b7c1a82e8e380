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

#include "gripper_tool/design_file.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"

namespace gripper_tool {
namespace {

enum class Kind { kNumber, kAngle, kConfig };

struct KeyDef {
  const char* name;
  Kind kind;
  bool required;
};

struct SectionDef {
  const char* name;
  bool required;
  std::vector<KeyDef> keys;
};

const std::vector<SectionDef>& Schema() {
  static const std::vector<SectionDef> schema = {
      {"tool",
       true,
       {{"m", Kind::kNumber, true},
        {"r", Kind::kNumber, true},
        {"theta_init", Kind::kAngle, true},
        {"theta_end", Kind::kAngle, true},
        {"h", Kind::kNumber, true},
        {"p", Kind::kNumber, true},
        {"q", Kind::kNumber, false},
        {"k", Kind::kNumber, true},
        {"d_axis", Kind::kNumber, true},
        {"r_edge", Kind::kNumber, true},
        {"v", Kind::kNumber, false},
        {"w_init", Kind::kNumber, true}}},
      {"spring",
       true,
       {{"kappa", Kind::kNumber, true}, {"beta", Kind::kAngle, true}}},
      {"contact",
       true,
       {{"mu", Kind::kNumber, true}, {"e", Kind::kNumber, true}}},
      {"grasp",
       true,
       {{"f_n", Kind::kNumber, true},
        {"g_tool", Kind::kNumber, false},
        {"tool_mass", Kind::kNumber, false},
        {"alpha", Kind::kAngle, true},
        {"gamma", Kind::kAngle, true},
        {"d", Kind::kNumber, true},
        {"d_com", Kind::kNumber, true},
        {"theta", Kind::kAngle, true},
        {"config", Kind::kConfig, true}}},
      {"object", false, {{"d_obj", Kind::kNumber, true}}},
      {"sizing",
       false,
       {{"m_min", Kind::kNumber, true},
        {"m_max", Kind::kNumber, true},
        {"r_min", Kind::kNumber, true},
        {"r_max", Kind::kNumber, true},
        {"theta_init_min", Kind::kAngle, true},
        {"theta_init_max", Kind::kAngle, true},
        {"grip_budget", Kind::kNumber, true}}},
  };
  return schema;
}

const SectionDef* FindSection(std::string_view name) {
  for (const SectionDef& s : Schema()) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

const KeyDef* FindKey(const SectionDef& section, std::string_view name) {
  for (const KeyDef& k : section.keys) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct Entry {
  std::string value;
  int line = 0;
  Kind kind = Kind::kNumber;
};

struct Section {
  int line = 0;
  std::map<std::string, Entry> entries;
};

double ParseNumberText(std::string_view text, int line, const std::string& key,
                       bool allow_infinity) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || std::isnan(value) ||
      (std::isinf(value) && !allow_infinity)) {
    throw ParseError(line, key,
                     "expected a finite number, got '" + std::string(text) +
                         "'");
  }
  return value;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Section> sections)
      : sections_(std::move(sections)) {}

  bool Has(const std::string& section) const {
    return sections_.count(section) > 0;
  }
  bool Has(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    return it != sections_.end() && it->second.entries.count(key) > 0;
  }
  int Line(const std::string& section, const std::string& key) const {
    return sections_.at(section).entries.at(key).line;
  }

  double Number(const std::string& section, const std::string& key,
                bool allow_infinity = false) const {
    const Entry& e = sections_.at(section).entries.at(key);
    std::string_view text = e.value;
    if (e.kind == Kind::kAngle) {
      double scale = 1.0;
      if (text.ends_with("deg")) {
        text.remove_suffix(3);
        scale = kDegToRad;
      } else if (text.ends_with("rad")) {
        text.remove_suffix(3);
      }
      return ParseNumberText(Trim(text), e.line, key, false) * scale;
    }
    return ParseNumberText(text, e.line, key, allow_infinity);
  }

  std::optional<double> OptionalNumber(const std::string& section,
                                       const std::string& key) const {
    if (!Has(section, key)) return std::nullopt;
    return Number(section, key);
  }

  const std::string& Text(const std::string& section,
                          const std::string& key) const {
    return sections_.at(section).entries.at(key).value;
  }

 private:
  std::map<std::string, Section> sections_;
};

std::map<std::string, Section> Tokenize(std::string_view text) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  const SectionDef* current_def = nullptr;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(line_no, "", "malformed section header");
      }
      const std::string name(Trim(line.substr(1, line.size() - 2)));
      current_def = FindSection(name);
      if (current_def == nullptr) {
        throw ParseError(line_no, "", "unknown section [" + name + "]");
      }
      if (sections.count(name) > 0) {
        throw ParseError(line_no, "", "duplicate section [" + name + "]");
      }
      current = &sections[name];
      current->line = line_no;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "", "expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    if (current == nullptr) {
      throw ParseError(line_no, key, "key outside of any section");
    }
    const KeyDef* def = FindKey(*current_def, key);
    if (def == nullptr) {
      throw ParseError(line_no, key,
                       std::string("unknown key in [") + current_def->name +
                           "]");
    }
    if (current->entries.count(key) > 0) {
      throw ParseError(line_no, key, "duplicate key");
    }
    current->entries[key] = {value, line_no, def->kind};
  }

  for (const SectionDef& def : Schema()) {
    const auto it = sections.find(def.name);
    if (it == sections.end()) {
      if (def.required) {
        throw ParseError(0, "",
                         std::string("missing section [") + def.name + "]");
      }
      continue;
    }
    for (const KeyDef& key : def.keys) {
      if (key.required && it->second.entries.count(key.name) == 0) {
        throw ParseError(it->second.line, key.name,
                         std::string("missing required key in [") + def.name +
                             "]");
      }
    }
  }
  return sections;
}

void Require(bool ok, const Reader& in, const std::string& section,
             const std::string& key, const std::string& message) {
  if (!ok) throw ParseError(in.Line(section, key), key, message);
}

}  // namespace

DesignFile ParseDesign(std::string_view text) {
  const Reader in(Tokenize(text));
  DesignFile design;

  ToolDimensions& tool = design.tool;
  for (const char* key :
       {"m", "r", "h", "p", "k", "d_axis", "r_edge", "w_init", "q", "v"}) {
    if (!in.Has("tool", key)) continue;
    const double value = in.Number("tool", key);
    Require(value > 0.0, in, "tool", key,
            std::string("ToolDimensions invariant violated: ") + key +
                " must be > 0");
  }
  tool.m = in.Number("tool", "m");
  tool.r = in.Number("tool", "r");
  tool.theta_init = in.Number("tool", "theta_init");
  tool.theta_end = in.Number("tool", "theta_end");
  tool.h = in.Number("tool", "h");
  tool.p = in.Number("tool", "p");
  tool.k = in.Number("tool", "k");
  tool.d_axis = in.Number("tool", "d_axis");
  tool.r_edge = in.Number("tool", "r_edge");
  tool.w_init = in.Number("tool", "w_init");
  tool.v = in.OptionalNumber("tool", "v").value_or(1.0);
  const double q = ShaftClearance(tool.d_axis, tool.r_edge);
  tool.q = in.OptionalNumber("tool", "q").value_or(q);

  Require(tool.theta_init < std::numbers::pi / 2, in, "tool", "theta_init",
          "ToolDimensions invariant violated: theta_init must be < 90deg");
  Require(tool.theta_end >= 0.0, in, "tool", "theta_end",
          "ToolDimensions invariant violated: theta_end must be >= 0");
  Require(tool.theta_end < tool.theta_init, in, "tool", "theta_end",
          "ToolDimensions invariant violated: theta_end must be < theta_init");
  const double width = tool.m + 2.0 * tool.r * std::sin(tool.theta_init);
  Require(std::abs(width - tool.w_init) <= kWidthTieTolerance * tool.w_init,
          in, "tool", "w_init",
          "ToolDimensions invariant violated: w_init = " +
              FormatNumber(tool.w_init) + " but m + 2 r sin(theta_init) = " +
              FormatNumber(width));
  if (in.Has("tool", "q")) {
    Require(std::abs(tool.q - q) <= kClearanceTieTolerance * q, in, "tool",
            "q",
            "ToolDimensions invariant violated: q = " + FormatNumber(tool.q) +
                " but d_axis + 2 r_edge = " + FormatNumber(q));
  }

  design.spring.kappa = in.Number("spring", "kappa");
  design.spring.beta = in.Number("spring", "beta");
  Require(design.spring.kappa > 0.0, in, "spring", "kappa",
          "SpringSpec invariant violated: kappa must be > 0");
  Require(design.spring.beta >= 0.0, in, "spring", "beta",
          "SpringSpec invariant violated: beta must be >= 0");

  design.contact.mu = in.Number("contact", "mu");
  design.contact.e = in.Number("contact", "e");
  Require(design.contact.mu > 0.0, in, "contact", "mu",
          "ContactModel invariant violated: mu must be > 0");
  Require(design.contact.e > 0.0, in, "contact", "e",
          "ContactModel invariant violated: e must be > 0");

  GraspState& grasp = design.grasp;
  const bool has_weight = in.Has("grasp", "g_tool");
  const bool has_mass = in.Has("grasp", "tool_mass");
  if (has_weight == has_mass) {
    throw ParseError(has_mass ? in.Line("grasp", "tool_mass") : 0,
                     has_mass ? "tool_mass" : "g_tool",
                     "[grasp] needs exactly one of g_tool (N) or tool_mass "
                     "(kg)");
  }
  const char* weight_key = has_weight ? "g_tool" : "tool_mass";
  grasp.g_tool = has_weight ? in.Number("grasp", "g_tool")
                            : in.Number("grasp", "tool_mass") * kStandardGravity;
  Require(grasp.g_tool > 0.0, in, "grasp", weight_key,
          "GraspState invariant violated: tool weight must be > 0");
  grasp.f_n = in.Number("grasp", "f_n");
  Require(grasp.f_n >= 0.0, in, "grasp", "f_n",
          "GraspState invariant violated: f_n must be >= 0");
  grasp.alpha = in.Number("grasp", "alpha");
  Require(grasp.alpha >= 0.0 && grasp.alpha <= std::numbers::pi, in, "grasp",
          "alpha", "GraspState invariant violated: alpha must lie in [0, 180deg]");
  grasp.gamma = in.Number("grasp", "gamma");
  Require(grasp.gamma >= 0.0 && grasp.gamma <= std::numbers::pi / 2, in,
          "grasp", "gamma",
          "GraspState invariant violated: gamma must lie in [0, 90deg]");
  grasp.d = in.Number("grasp", "d");
  Require(grasp.d >= 0.0, in, "grasp", "d",
          "GraspState invariant violated: d must be >= 0");
  grasp.d_com = in.Number("grasp", "d_com");
  Require(grasp.d_com >= 0.0, in, "grasp", "d_com",
          "GraspState invariant violated: d_com must be >= 0");
  grasp.theta = in.Number("grasp", "theta");
  const std::string& config = in.Text("grasp", "config");
  if (config == "backward") {
    grasp.config = BaseConfig::kBackwardBase;
  } else if (config == "forward") {
    grasp.config = BaseConfig::kForwardBase;
  } else {
    throw ParseError(in.Line("grasp", "config"), "config",
                     "expected 'backward' or 'forward', got '" + config + "'");
  }

  if (in.Has("object")) {
    design.d_obj = in.Number("object", "d_obj");
    Require(*design.d_obj >= 0.0, in, "object", "d_obj",
            "ObjectSpec invariant violated: d_obj must be >= 0");
  }

  if (in.Has("sizing")) {
    SizingSpec sizing;
    SizingBounds& b = sizing.bounds;
    b.m_min = in.Number("sizing", "m_min");
    b.m_max = in.Number("sizing", "m_max");
    b.r_min = in.Number("sizing", "r_min");
    b.r_max = in.Number("sizing", "r_max");
    b.theta_init_min = in.Number("sizing", "theta_init_min");
    b.theta_init_max = in.Number("sizing", "theta_init_max");
    sizing.grip_budget =
        in.Number("sizing", "grip_budget", /*allow_infinity=*/true);
    Require(b.m_min > 0.0 && b.m_min <= b.m_max, in, "sizing", "m_max",
            "SizingProblem invariant violated: need 0 < m_min <= m_max");
    Require(b.r_min > 0.0 && b.r_min <= b.r_max, in, "sizing", "r_max",
            "SizingProblem invariant violated: need 0 < r_min <= r_max");
    Require(b.theta_init_min > 0.0 && b.theta_init_min <= b.theta_init_max &&
                b.theta_init_max < std::numbers::pi / 2,
            in, "sizing", "theta_init_max",
            "SizingProblem invariant violated: need 0 < theta_init_min <= "
            "theta_init_max < 90deg");
    Require(sizing.grip_budget > 0.0, in, "sizing", "grip_budget",
            "SizingProblem invariant violated: grip_budget must be > 0");
    design.sizing = sizing;
  }

  ValidateToolDimensions(design.tool);
  ValidateSpringSpec(design.spring);
  ValidateContactModel(design.contact);
  ValidateGraspState(design.grasp);
  return design;
}

DesignFile LoadDesign(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError(0, "", "cannot open design file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return ParseDesign(buffer.str());
}

std::string SerializeDesign(const DesignFile& design) {
  std::string out;
  auto put = [&out](const char* key, double value) {
    out += key;
    out += " = ";
    out += FormatExact(value);
    out += '\n';
  };
  const ToolDimensions& t = design.tool;
  out += "[tool]\n";
  put("m", t.m);
  put("r", t.r);
  put("theta_init", t.theta_init);
  put("theta_end", t.theta_end);
  put("h", t.h);
  put("p", t.p);
  put("q", t.q);
  put("k", t.k);
  put("d_axis", t.d_axis);
  put("r_edge", t.r_edge);
  put("v", t.v);
  put("w_init", t.w_init);
  out += "\n[spring]\n";
  put("kappa", design.spring.kappa);
  put("beta", design.spring.beta);
  out += "\n[contact]\n";
  put("mu", design.contact.mu);
  put("e", design.contact.e);
  const GraspState& g = design.grasp;
  out += "\n[grasp]\n";
  put("f_n", g.f_n);
  put("g_tool", g.g_tool);
  put("alpha", g.alpha);
  put("gamma", g.gamma);
  put("d", g.d);
  put("d_com", g.d_com);
  put("theta", g.theta);
  out += "config = ";
  out += BaseConfigName(g.config);
  out += '\n';
  if (design.d_obj) {
    out += "\n[object]\n";
    put("d_obj", *design.d_obj);
  }
  if (design.sizing) {
    const SizingBounds& b = design.sizing->bounds;
    out += "\n[sizing]\n";
    put("m_min", b.m_min);
    put("m_max", b.m_max);
    put("r_min", b.r_min);
    put("r_max", b.r_max);
    put("theta_init_min", b.theta_init_min);
    put("theta_init_max", b.theta_init_max);
    put("grip_budget", design.sizing->grip_budget);
  }
  return out;
}

SizingProblem MakeSizingProblem(const DesignFile& design) {
  if (!design.sizing) {
    throw DomainError("design file has no [sizing] section");
  }
  SizingProblem problem;
  problem.d_axis = design.tool.d_axis;
  problem.r_edge = design.tool.r_edge;
  problem.k = design.tool.k;
  problem.w_init = design.tool.w_init;
  problem.v = design.tool.v;
  problem.bounds = design.sizing->bounds;
  problem.grip_budget = design.sizing->grip_budget;
  problem.spring = design.spring;
  problem.grasp = design.grasp;
  return problem;
}

}  // namespace gripper_tool
