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

#ifndef GRIPPER_TOOL_ERRORS_H_
#define GRIPPER_TOOL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gripper_tool {

// Argument outside the mathematical domain of an operation, or a violated
// type invariant. Every analysis error derives from this; the CLI maps it to
// exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 2*mu*Fn < G: the gripper cannot carry the tool at any grasp offset.
class InfeasibleHoldError : public DomainError {
 public:
  InfeasibleHoldError(const std::string& what, double deficit)
      : DomainError(what), deficit_(deficit) {}
  // G - 2*mu*Fn, in newtons (> 0).
  double deficit() const { return deficit_; }

 private:
  double deficit_;
};

// cos(theta) = 0 in the spring-to-gripper force transmission.
class SingularTransmissionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Contact with zero torque capacity (mu*e*Fn = 0).
class DegenerateContactError : public DomainError {
 public:
  using DomainError::DomainError;
};

// No nonnegative object weight satisfies balance and contact capacity.
class NoFeasiblePayloadError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Linkage geometry that cannot be built (e.g. shaft clearance longer than
// the linkage).
class GeometryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Tangential load alone exceeds the friction capacity.
class ZeroCapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InfeasibleProblemError : public DomainError {
 public:
  InfeasibleProblemError(const std::string& what,
                         std::vector<std::string> binding)
      : DomainError(what), binding_(std::move(binding)) {}
  // Constraints violated at the least-infeasible candidate examined.
  const std::vector<std::string>& binding() const { return binding_; }

 private:
  std::vector<std::string> binding_;
};

// Malformed design file. `line` is 1-based; 0 when the problem is not tied
// to a single line (e.g. a missing key).
class ParseError : public DomainError {
 public:
  ParseError(int line, std::string key, const std::string& message)
      : DomainError(Format(line, key, message)),
        line_(line),
        key_(std::move(key)) {}
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  static std::string Format(int line, const std::string& key,
                            const std::string& message) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "key '" + key + "': ";
    return out + message;
  }

  int line_;
  std::string key_;
};

// Bad command-line usage (unknown subcommand, malformed range). Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gripper_tool

#endif  // GRIPPER_TOOL_ERRORS_H_
