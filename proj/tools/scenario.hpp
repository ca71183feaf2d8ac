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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctele/accounting.hpp"
#include "ctele/executor.hpp"
#include "ctele/resources.hpp"

namespace ctele::cli {

/// Invalid or unsupported configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxSimulatedQubits = 26;
inline constexpr std::uint64_t kMaxEnumeratedBranches = std::uint64_t{1} << 16;
inline constexpr double kNormalizationWarning = 1e-9;

/// Scenario fields as written in a file or on the command line, before
/// validation. Every field is optional so that flags can override a file.
struct ScenarioInput {
    std::optional<std::size_t> m;
    std::optional<std::vector<std::size_t>> ml;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::optional<std::string> method;
    std::optional<std::string> preset;
    std::optional<std::uint64_t> message_seed;
    std::optional<std::vector<QubitMessage>> amplitudes;
    std::optional<bool> enumerate;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> defector;  // 1-based
    std::optional<std::string> out;
};

/// Parses a JSON scenario document.
ScenarioInput parse_scenario_text(const std::string &text);
ScenarioInput read_scenario_file(const std::string &path);

/// Fields set in `flags` replace those in `file`. Setting one of m, ml drops
/// the other, and setting one message source drops the others.
ScenarioInput merge(ScenarioInput file, const ScenarioInput &flags);

enum class MessageSource { Preset, Random, Explicit };

struct ScenarioConfig {
    NetworkShape shape = NetworkShape::single_receiver(1, 1);
    Method method = Method::EntanglingProtocol;
    MessageSource source = MessageSource::Preset;
    std::string preset = "spread";
    std::uint64_t message_seed = 0;
    /// One spec per receiver.
    std::vector<MessageSpec> messages;
    double max_normalization = 0.0;
    RunMode mode = Enumerate{};
    /// 0-based agent index.
    std::optional<std::size_t> defector;
    std::optional<std::string> out;
    std::vector<std::string> warnings;

    bool enumerate() const { return std::holds_alternative<Enumerate>(mode); }
};

/// Resolves the shape only; used by commands that need no message.
NetworkShape resolve_shape(const ScenarioInput &input);

/// Validates and resolves a scenario. Throws ConfigError.
ScenarioConfig resolve(const ScenarioInput &input);

/// Qubits held by the simulator at once for this method and shape.
std::size_t simulated_qubits(Method method, const NetworkShape &shape);

/// Leaves visited by exhaustive enumeration.
std::uint64_t enumerated_branches(Method method, const NetworkShape &shape, bool with_defector);

/// Named message presets: spread, zero, one, plus.
std::vector<MessageSpec> preset_messages(const std::string &name, const NetworkShape &shape);

}  // namespace ctele::cli
