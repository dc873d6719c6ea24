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

// JSON encodings of every artifact the CLI reads or writes. Labels are
// emitted as strings; numbers are exact strings ("p" or "p/q").

#ifndef SVPND_IO_HPP_
#define SVPND_IO_HPP_

#include <string>

#include "json.hpp"
#include "svpnd/certificates.hpp"
#include "svpnd/feasibility.hpp"
#include "svpnd/lab.hpp"
#include "svpnd/model.hpp"
#include "svpnd/pyramidal.hpp"
#include "svpnd/reduction.hpp"
#include "svpnd/tree_vpn.hpp"

namespace svpnd {

using Json = nlohmann::json;

// Throws Error(kParseError) on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);

RawInstance raw_instance_from_json(const Json& j);
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& instance);

Json demand_set_to_json(const Instance& instance, const DemandSet& demands);
DemandSet demand_set_from_json(const Instance& instance, const Json& j);

Json vpn_solution_to_json(const Instance& instance, const VpnSolution& solution);
// Also accepts a tree solution document and expands it to all-pair paths.
VpnSolution vpn_solution_from_json(const Instance& instance, const Json& j);

Json tree_solution_to_json(const Instance& instance, const TreeSolution& tree);
// Capacities are recomputed from "tree_edges"; "certified" is carried over.
TreeSolution tree_solution_from_json(const Instance& instance, const Json& j);

Json pr_system_to_json(const PrInstance& pr, const PrPathSystem& system);
PrPathSystem pr_system_from_json(const Instance& instance, const Json& j);

Json feasibility_report_to_json(const Instance& instance,
                                const FeasibilityReport& report);
Json certificate_to_json(const Instance& instance,
                         const LowerBoundCertificate& cert);
Json chain_report_to_json(const Instance& instance, const ChainReport& report);

Json reduction_to_json(const ReductionMap& map);
ReductionMap reduction_from_json(const Json& j);

// Fields absent from `j` keep the values in `base`.
ExperimentConfig experiment_config_from_json(const Json& j,
                                             ExperimentConfig base = {});
Json record_to_json(const ConjectureRecord& record);
Json summary_to_json(const ExperimentSummary& summary);

}  // namespace svpnd

#endif  // SVPND_IO_HPP_
