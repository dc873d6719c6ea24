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

#include "svpnd/error.hpp"

namespace svpnd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kParallelEdge: return "ParallelEdge";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kDuplicateTerminal: return "DuplicateTerminal";
    case ErrorCode::kTooFewTerminals: return "TooFewTerminals";
    case ErrorCode::kNonPositiveBound: return "NonPositiveBound";
    case ErrorCode::kUnknownTerminal: return "UnknownTerminal";
    case ErrorCode::kInvalidPath: return "InvalidPath";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kTerminalNotSpanned: return "TerminalNotSpanned";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kPathEndpointMismatch: return "PathEndpointMismatch";
    case ErrorCode::kNonSimplePath: return "NonSimplePath";
    case ErrorCode::kNonUnitBounds: return "NonUnitBounds";
    case ErrorCode::kNotARing: return "NotARing";
    case ErrorCode::kAllNodesNonterminal: return "AllNodesNonterminal";
    case ErrorCode::kDegenerateRing: return "DegenerateRing";
    case ErrorCode::kNotATreeSystem: return "NotATreeSystem";
    case ErrorCode::kMissingPairPath: return "MissingPairPath";
    case ErrorCode::kInfeasibleInput: return "InfeasibleInput";
    case ErrorCode::kIsolatedTerminal: return "IsolatedTerminal";
    case ErrorCode::kChainBroken: return "ChainBroken";
  }
  return "Unknown";
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string message = "invalid instance:";
  for (const auto& v : violations) {
    message += " [";
    message += to_string(v.code);
    message += "] ";
    message += v.detail;
    message += ';';
  }
  return message;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorCode::kParseError : violations.front().code,
            join_violations(violations)),
      violations_(std::move(violations)) {}

}  // namespace svpnd
