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

#include <iosfwd>
#include <string>
#include <vector>

#include "ctele/protocol.hpp"
#include "report.hpp"
#include "scenario.hpp"

namespace ctele::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;

inline constexpr double kFidelityTolerance = 1e-10;
inline constexpr double kDiagonalTolerance = 1e-12;

/// A named property check and whether it held.
struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RunResult {
    Json report;
    std::vector<PropertyCheck> checks;
    bool passed() const;
};

/// Runs one scenario and builds its report.
RunResult execute_run(const ScenarioConfig &cfg, const CorrectionRule &rule = CorrectionRule::standard());

/// Writes the report to cfg.out (or `out` when unset) and returns the exit
/// code.
int cmd_run(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err);

/// Inclusive m range given as "a..b" or "a". Throws ConfigError.
struct MRange {
    std::size_t first;
    std::size_t last;
};
MRange parse_m_range(const std::string &text);

struct CompareRequest {
    std::optional<std::string> m_range;
    std::optional<std::vector<std::size_t>> ml;
    std::size_t agents = 1;
    std::optional<std::size_t> receivers;
    std::optional<std::string> out;
};

int cmd_compare(const CompareRequest &request, std::ostream &out, std::ostream &err);

struct SelftestOptions {
    /// Swap the phi+ correction pair, to confirm the suite catches it.
    bool corrupt_table = false;
};

std::vector<PropertyCheck> run_selftest(const SelftestOptions &options);

int cmd_selftest(const SelftestOptions &options, std::ostream &out);

}  // namespace ctele::cli
