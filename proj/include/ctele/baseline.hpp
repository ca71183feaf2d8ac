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


/**
 * @file
 * Per-qubit GHZ baseline: every message qubit gets its own (n+2)-qubit GHZ
 * state shared by the sender, the receiver and the n agents.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ctele/density_matrix.hpp"
#include "ctele/executor.hpp"
#include "ctele/resources.hpp"

namespace ctele {

/// Qubit layout of one baseline copy: message, sender GHZ qubit, receiver GHZ
/// qubit, then the agents.
struct BaselineLayout {
    static constexpr std::size_t kMessage = 0;
    static constexpr std::size_t kSender = 1;
    static constexpr std::size_t kReceiver = 2;
    static constexpr std::size_t agent(std::size_t j) { return 3 + j; }
    static constexpr std::size_t width(std::size_t agents) { return 3 + agents; }
};

/// Receiver correction for one copy: the Bell-outcome flip followed by Z when
/// the agents' bits have odd parity.
PauliOp baseline_correction(BellOutcome outcome, int agent_parity);

/// message (x) GHZ+ over (sender, receiver, agents).
StateVector prepare_baseline_copy(const QubitMessage &message, std::size_t agents);

/// Schedule for one copy: Bell measurement on (message, sender) into slot 0,
/// then Hadamard and Z measurement per agent into slot 1 + j.
std::vector<Operation> baseline_schedule(std::size_t agents, std::optional<std::size_t> skip_agent = std::nullopt);

struct BaselineTranscript {
    std::vector<BellOutcome> bell_outcomes;    // one per copy
    std::vector<std::vector<int>> agent_bits;  // [copy][agent]
    std::vector<PauliOp> corrections;          // one per copy
    double fidelity = 0.0;
    double branch_probability = 0.0;
    DensityMatrix receiver_state = DensityMatrix::from_state(StateVector(1));
};

struct BaselineRun {
    std::vector<BaselineTranscript> transcripts;
    std::size_t aux_qubits_allocated = 0;
    std::size_t qubits_per_agent = 0;
    std::size_t hadamards_per_agent = 0;
    std::size_t measurements_per_agent = 0;
    std::size_t bits_per_agent = 0;
    std::size_t bell_measurements = 0;
};

/// Runs the baseline for a single receiver. The copies share no entanglement,
/// so each is simulated on its own register and the joint branches are the
/// Cartesian product of the per-copy branches, in lexicographic copy order.
BaselineRun run_baseline_ghz(const MessageSpec &spec, const NetworkShape &shape, const RunMode &mode);

}  // namespace ctele
