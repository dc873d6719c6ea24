// Copyright 2026 The svpnd Authors
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

#ifndef SVPND_ERROR_HPP_
#define SVPND_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace svpnd {

enum class ErrorCode {
  kParseError,
  kDisconnectedGraph,
  kNegativeCost,
  kSelfLoop,
  kParallelEdge,
  kUnknownNode,
  kDuplicateNode,
  kDuplicateTerminal,
  kTooFewTerminals,
  kNonPositiveBound,
  kUnknownTerminal,
  kInvalidPath,
  kNotATree,
  kTerminalNotSpanned,
  kBudgetExceeded,
  kPathEndpointMismatch,
  kNonSimplePath,
  kNonUnitBounds,
  kNotARing,
  kAllNodesNonterminal,
  kDegenerateRing,
  kNotATreeSystem,
  kMissingPairPath,
  kInfeasibleInput,
  kIsolatedTerminal,
  kChainBroken,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every module. Internal invariant failures use
// std::logic_error instead, so callers can tell bad input from bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Violation {
  ErrorCode code;
  std::string detail;
};

// Raised by validate_instance; lists every violation, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace svpnd

#endif  // SVPND_ERROR_HPP_
