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
#include <optional>
#include <string_view>
#include <vector>

#include "ctele/resources.hpp"

namespace ctele {

enum class Method { EntanglingProtocol, GhzBaseline };

std::string_view to_string(Method method);

/// Closed-form resource cost of one method. Message qubits are not counted
/// as auxiliary. Sender operations are reported separately from the per-agent
/// columns.
struct ResourceReport {
    Method method = Method::EntanglingProtocol;
    std::size_t aux_qubits = 0;
    std::size_t qubits_per_agent = 0;
    std::size_t hadamards_per_agent = 0;
    std::size_t measurements_per_agent = 0;
    /// Bits each agent sends to receiver l.
    std::vector<std::size_t> classical_bits_per_agent_per_receiver;
    std::size_t bell_measurements = 0;
    std::size_t sender_hadamards = 0;
    std::size_t sender_measurements = 0;
    std::size_t sender_classical_bits = 0;

    /// Hadamards plus measurements per agent.
    std::size_t operations_per_agent() const { return hadamards_per_agent + measurements_per_agent; }
    std::size_t bits_per_agent() const;
};

ResourceReport account(Method method, const NetworkShape &shape);

struct CrossoverRow {
    std::size_t m = 0;
    ResourceReport entangling;
    ResourceReport baseline;
    bool aux_advantage = false;   // strictly fewer auxiliary qubits
    bool aux_equal = false;
    bool ops_advantage = false;   // strictly fewer per-agent operations
    bool bits_advantage = false;  // strictly fewer per-agent bits
    /// No axis worse and at least one strictly better.
    bool dominates = false;
};

struct CrossoverTable {
    std::size_t agents = 0;
    std::size_t receivers = 0;
    std::vector<CrossoverRow> rows;
    std::optional<std::size_t> first_dominant_m;
    std::optional<std::size_t> first_aux_advantage_m;
};

/// Both methods on one shape, with the comparison flags filled in. `m` is
/// left at 0.
CrossoverRow compare_methods(const NetworkShape &shape);

/// Rows for m = m_first..m_last, each of the `receivers` receivers holding m
/// message qubits.
CrossoverTable crossover_table(std::size_t agents, std::size_t m_first, std::size_t m_last,
                               std::size_t receivers = 1);

}  // namespace ctele
