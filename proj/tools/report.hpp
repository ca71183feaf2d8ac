// Copyright 2026 The ctele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>
#include <vector>

#include "ctele/accounting.hpp"
#include "ctele/baseline.hpp"
#include "ctele/defection.hpp"
#include "ctele/protocol.hpp"
#include "json.hpp"
#include "scenario.hpp"

namespace ctele::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rounds to 15 significant digits and maps -0 to 0.
double round15(double value);

/// Pretty-printed document followed by a newline.
std::string dump(const Json &doc);

Json to_json(Complex z);
Json to_json(const DensityMatrix &rho);
Json to_json(const ResourceReport &report);
Json to_json(const NetworkShape &shape);

/// Header shared by every run report: schema, command, method, shape, mode,
/// message and resource counts.
Json run_header(const ScenarioConfig &cfg);

Json branches_json(const std::vector<BranchRecord> &records);
Json baseline_branches_json(const BaselineRun &run);
Json defection_json(const DefectionReport &report);
Json baseline_defection_json(const BaselineDefectionReport &report);

Json crossover_json(const CrossoverTable &table);
Json comparison_json(const NetworkShape &shape, const CrossoverRow &row);

/// Fixed-width text rendering of comparison rows.
std::string crossover_text(const std::vector<CrossoverRow> &rows, const std::vector<std::string> &labels);

}  // namespace ctele::cli
