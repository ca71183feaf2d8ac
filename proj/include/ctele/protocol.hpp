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
 * Controlled teleportation of multi-qubit messages through a shared GHZ
 * control resource: corrections, classical messaging, and the branch engine.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ctele/density_matrix.hpp"
#include "ctele/executor.hpp"
#include "ctele/resources.hpp"

namespace ctele {

/// Which of the two GHZ-correlated receiver states the measurements selected.
/// Psi pairs with GHZ+, PsiPrime with GHZ-.
enum class Branch { Psi, PsiPrime };

std::string_view to_string(Branch branch);

/// Psi iff the XOR of all agent bits and the sender's GHZ bit is 0.
Branch infer_branch(std::span<const int> agent_bits, int sender_bit);

struct CorrectionPair {
    PauliOp psi;
    PauliOp psi_prime;

    friend bool operator==(const CorrectionPair &, const CorrectionPair &) = default;
};

/// Bell outcome -> Pauli correction for each branch.
class CorrectionRule {
  public:
    /// phi+ -> (I, Z), phi- -> (Z, I), psi+ -> (X, Y), psi- -> (Y, X).
    static CorrectionRule standard();

    const CorrectionPair &operator[](BellOutcome outcome) const { return table_[static_cast<std::size_t>(outcome)]; }
    CorrectionPair &operator[](BellOutcome outcome) { return table_[static_cast<std::size_t>(outcome)]; }

    PauliOp lookup(BellOutcome outcome, Branch branch) const {
        const auto &pair = (*this)[outcome];
        return branch == Branch::Psi ? pair.psi : pair.psi_prime;
    }

    friend bool operator==(const CorrectionRule &, const CorrectionRule &) = default;

  private:
    std::array<CorrectionPair, 4> table_{};
};

PauliOp correction_for(BellOutcome outcome, Branch branch);

/// State of a receiver qubit right after the sender's Bell measurement on its
/// message pair, within the given branch (before any correction).
Ket2 conditional_receiver_qubit(const QubitMessage &message, BellOutcome outcome, Branch branch);

enum class PartyKind { Sender, Receiver, Agent };

struct PartyId {
    PartyKind kind;
    std::size_t index = 0;

    friend auto operator<=>(const PartyId &, const PartyId &) = default;
};

std::string to_string(const PartyId &id);

/// A classical message. `subject` is the message-qubit index a Bell outcome
/// refers to; bits from GHZ measurements carry no subject.
struct ClassicalMessage {
    PartyId from;
    std::vector<PartyId> to;
    std::variant<BellOutcome, int> payload;
    std::optional<std::size_t> subject;
    std::string about;
};

struct Party {
    PartyId id;
    std::vector<std::size_t> held_qubits;
    std::vector<ClassicalMessage> inbox;
};

/// Parties of one run with synchronous, lossless, ordered delivery.
class ClassicalNetwork {
  public:
    /// Assigns qubits to parties from the registry roles and checks that the
    /// holdings are disjoint and cover the registry.
    ClassicalNetwork(const QubitRegistry &registry, const NetworkShape &shape);

    void send(ClassicalMessage message);

    const Party &party(const PartyId &id) const;
    std::span<const Party> parties() const noexcept { return parties_; }

    /// Number of messages sent by `id` so far.
    std::size_t sent_by(const PartyId &id) const;

  private:
    Party &mutable_party(const PartyId &id);

    std::vector<Party> parties_;
    std::map<PartyId, std::size_t> sent_counts_;
};

enum class AgentBasis { HadamardThenZ, PlusMinus };

struct ProtocolOptions {
    CorrectionRule rule = CorrectionRule::standard();
    AgentBasis basis = AgentBasis::HadamardThenZ;
    /// When set, the measurement schedule is randomly interleaved with this
    /// seed. The per-qubit order (Hadamard before measurement) is kept.
    std::optional<std::uint64_t> schedule_seed;
};

/// What one receiver saw and did in one branch.
struct ProtocolTranscript {
    std::size_t receiver = 0;
    std::vector<BellOutcome> bell_outcomes;
    std::vector<int> agent_bits;
    int sender_ghz_bit = 0;
    Branch branch = Branch::Psi;
    std::vector<PauliOp> corrections;
    double fidelity = 0.0;
    double branch_probability = 0.0;
    DensityMatrix receiver_state = DensityMatrix::from_state(StateVector(1));
    std::vector<ClassicalMessage> inbox;
};

/// One joint measurement branch of a run with one transcript per receiver.
struct BranchRecord {
    /// Bell outcomes of every pair (receiver-major), agent bits, sender bit.
    std::vector<int> key;
    double probability = 0.0;
    std::vector<ProtocolTranscript> receivers;
};

/// Outcome-slot layout of a protocol schedule.
struct SlotLayout {
    std::size_t pairs;
    std::size_t agents;

    std::size_t bell(std::size_t pair) const { return pair; }
    std::size_t agent(std::size_t j) const { return pairs + j; }
    std::size_t sender() const { return pairs + agents; }
    std::size_t count() const { return pairs + agents + 1; }
};

/// Default schedule: Bell measurements in pair order, then each agent's
/// measurement, then the sender's GHZ measurement. `skip_agent` leaves one
/// agent's qubit untouched.
std::vector<Operation> protocol_schedule(const QubitRegistry &registry, const NetworkShape &shape, AgentBasis basis,
                                         std::optional<std::size_t> skip_agent = std::nullopt);

/// Runs the protocol for every receiver. Records are sorted by key.
std::vector<BranchRecord> run_protocol(std::span<const MessageSpec> messages, const NetworkShape &shape,
                                       const RunMode &mode, const ProtocolOptions &options = {});

/// Single-receiver run (k = 1): one transcript per branch, canonical order.
std::vector<ProtocolTranscript> run_controlled_teleport(const MessageSpec &spec, const NetworkShape &shape,
                                                        const RunMode &mode, const ProtocolOptions &options = {});

/// Multi-receiver run (k >= 2).
std::vector<BranchRecord> run_multi_receiver(std::span<const MessageSpec> specs, const NetworkShape &shape,
                                             const RunMode &mode, const ProtocolOptions &options = {});

}  // namespace ctele
