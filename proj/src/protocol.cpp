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


#include "ctele/protocol.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace ctele {

std::string_view to_string(Branch branch) { return branch == Branch::Psi ? "psi" : "psi'"; }

Branch infer_branch(std::span<const int> agent_bits, int sender_bit) {
    int parity = sender_bit & 1;
    for (int b : agent_bits) {
        parity ^= b & 1;
    }
    return parity == 0 ? Branch::Psi : Branch::PsiPrime;
}

CorrectionRule CorrectionRule::standard() {
    CorrectionRule rule;
    rule[BellOutcome::PhiPlus] = {PauliOp::I, PauliOp::Z};
    rule[BellOutcome::PhiMinus] = {PauliOp::Z, PauliOp::I};
    rule[BellOutcome::PsiPlus] = {PauliOp::X, PauliOp::Y};
    rule[BellOutcome::PsiMinus] = {PauliOp::Y, PauliOp::X};
    return rule;
}

PauliOp correction_for(BellOutcome outcome, Branch branch) {
    return CorrectionRule::standard().lookup(outcome, branch);
}

Ket2 conditional_receiver_qubit(const QubitMessage &message, BellOutcome outcome, Branch branch) {
    const Complex a = message.alpha;
    const Complex b = message.beta;
    const double s = branch == Branch::Psi ? 1.0 : -1.0;
    switch (outcome) {
    case BellOutcome::PhiPlus:
        return {a, s * b};
    case BellOutcome::PhiMinus:
        return {a, -s * b};
    case BellOutcome::PsiPlus:
        return {b, s * a};
    case BellOutcome::PsiMinus:
        return {-b, s * a};
    }
    throw std::logic_error("unreachable");
}

std::string to_string(const PartyId &id) {
    switch (id.kind) {
    case PartyKind::Sender:
        return "sender";
    case PartyKind::Receiver:
        return "receiver" + std::to_string(id.index + 1);
    case PartyKind::Agent:
        return "A" + std::to_string(id.index + 1);
    }
    return "?";
}

ClassicalNetwork::ClassicalNetwork(const QubitRegistry &registry, const NetworkShape &shape) {
    parties_.push_back({{PartyKind::Sender, 0}, {}, {}});
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        parties_.push_back({{PartyKind::Receiver, l}, {}, {}});
    }
    for (std::size_t j = 0; j < shape.agents(); ++j) {
        parties_.push_back({{PartyKind::Agent, j}, {}, {}});
    }
    std::vector<int> owners(registry.size(), 0);
    for (std::size_t q = 0; q < registry.size(); ++q) {
        const auto &label = registry.label(q);
        PartyId owner{PartyKind::Sender, 0};
        if (label.role == QubitRole::ReceiverEpr) {
            owner = {PartyKind::Receiver, label.receiver};
        } else if (label.role == QubitRole::Agent) {
            owner = {PartyKind::Agent, label.index};
        }
        mutable_party(owner).held_qubits.push_back(q);
        ++owners[q];
    }
    for (std::size_t q = 0; q < owners.size(); ++q) {
        if (owners[q] != 1) {
            throw std::logic_error("qubit " + std::to_string(q) + " must have exactly one holder");
        }
    }
}

Party &ClassicalNetwork::mutable_party(const PartyId &id) {
    for (auto &p : parties_) {
        if (p.id == id) {
            return p;
        }
    }
    throw std::out_of_range("unknown party " + to_string(id));
}

const Party &ClassicalNetwork::party(const PartyId &id) const {
    for (const auto &p : parties_) {
        if (p.id == id) {
            return p;
        }
    }
    throw std::out_of_range("unknown party " + to_string(id));
}

void ClassicalNetwork::send(ClassicalMessage message) {
    party(message.from);
    for (const auto &to : message.to) {
        mutable_party(to).inbox.push_back(message);
    }
    sent_counts_[message.from] += 1;
}

std::size_t ClassicalNetwork::sent_by(const PartyId &id) const {
    const auto it = sent_counts_.find(id);
    return it == sent_counts_.end() ? 0 : it->second;
}

std::vector<Operation> protocol_schedule(const QubitRegistry &registry, const NetworkShape &shape, AgentBasis basis,
                                         std::optional<std::size_t> skip_agent) {
    const SlotLayout slots{shape.total_messages(), shape.agents()};
    std::vector<Operation> ops;
    std::size_t pair = 0;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        for (std::size_t i = 0; i < shape.messages_for(l); ++i) {
            ops.push_back(
                {OpKind::BellMeasurement, registry.message(l, i), registry.sender_epr(l, i), slots.bell(pair)});
            ++pair;
        }
    }
    auto measure = [&](std::size_t qubit, std::size_t slot) {
        if (basis == AgentBasis::HadamardThenZ) {
            ops.push_back({OpKind::Hadamard, qubit});
            ops.push_back({OpKind::MeasureZ, qubit, 0, slot});
        } else {
            ops.push_back({OpKind::MeasurePlusMinus, qubit, 0, slot});
        }
    };
    for (std::size_t j = 0; j < shape.agents(); ++j) {
        if (skip_agent && *skip_agent == j) {
            continue;
        }
        measure(registry.agent(j), slots.agent(j));
    }
    measure(registry.sender_ghz(), slots.sender());
    return ops;
}

namespace {

void deliver_classical(ClassicalNetwork &net, const QubitRegistry &registry, const NetworkShape &shape,
                       std::span<const int> outcomes) {
    const SlotLayout slots{shape.total_messages(), shape.agents()};
    std::vector<PartyId> receivers;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        receivers.push_back({PartyKind::Receiver, l});
    }
    std::size_t pair = 0;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        for (std::size_t i = 0; i < shape.messages_for(l); ++i, ++pair) {
            net.send({{PartyKind::Sender, 0},
                      {{PartyKind::Receiver, l}},
                      static_cast<BellOutcome>(outcomes[slots.bell(pair)]),
                      i,
                      registry.name(registry.message(l, i)) + "," + registry.name(registry.sender_epr(l, i))});
        }
    }
    for (std::size_t j = 0; j < shape.agents(); ++j) {
        const int bit = outcomes[slots.agent(j)];
        if (bit == kUnmeasured) {
            continue;
        }
        net.send({{PartyKind::Agent, j}, receivers, bit, std::nullopt, registry.name(registry.agent(j))});
    }
    net.send({{PartyKind::Sender, 0}, receivers, outcomes[slots.sender()], std::nullopt,
              registry.name(registry.sender_ghz())});
}

}  // namespace

std::vector<BranchRecord> run_protocol(std::span<const MessageSpec> messages, const NetworkShape &shape,
                                       const RunMode &mode, const ProtocolOptions &options) {
    const auto system = prepare_protocol_system(messages, shape);
    const auto &registry = system.registry;
    auto schedule = protocol_schedule(registry, shape, options.basis);
    if (options.schedule_seed) {
        std::mt19937_64 rng(*options.schedule_seed);
        schedule = shuffled_schedule(schedule, rng);
    }
    const SlotLayout slots{shape.total_messages(), shape.agents()};

    std::vector<StateVector> targets;
    std::vector<std::vector<std::size_t>> receiver_qubits;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        targets.push_back(prepare_message_state(messages[l]));
        receiver_qubits.push_back(registry.receiver_qubits(l));
    }

    std::vector<BranchRecord> records;
    execute(system.state, schedule, slots.count(), mode, [&](const MeasurementLeaf &leaf) {
        ClassicalNetwork net(registry, shape);
        deliver_classical(net, registry, shape, leaf.outcomes);

        BranchRecord record;
        record.key.assign(leaf.outcomes.begin(), leaf.outcomes.end());
        record.probability = leaf.probability;
        StateVector corrected = leaf.state;
        for (std::size_t l = 0; l < shape.receivers(); ++l) {
            const auto &inbox = net.party({PartyKind::Receiver, l}).inbox;
            ProtocolTranscript t;
            t.receiver = l;
            t.bell_outcomes.assign(shape.messages_for(l), BellOutcome::PhiPlus);
            t.agent_bits.assign(shape.agents(), 0);
            for (const auto &msg : inbox) {
                if (const auto *bell = std::get_if<BellOutcome>(&msg.payload)) {
                    t.bell_outcomes.at(*msg.subject) = *bell;
                } else if (msg.from.kind == PartyKind::Agent) {
                    t.agent_bits.at(msg.from.index) = std::get<int>(msg.payload);
                } else {
                    t.sender_ghz_bit = std::get<int>(msg.payload);
                }
            }
            t.branch = infer_branch(t.agent_bits, t.sender_ghz_bit);
            for (std::size_t i = 0; i < shape.messages_for(l); ++i) {
                const auto op = options.rule.lookup(t.bell_outcomes[i], t.branch);
                t.corrections.push_back(op);
                corrected.apply(op, receiver_qubits[l][i]);
            }
            t.branch_probability = leaf.probability;
            t.inbox = inbox;
            record.receivers.push_back(std::move(t));
        }
        for (std::size_t l = 0; l < shape.receivers(); ++l) {
            auto &t = record.receivers[l];
            t.receiver_state = partial_trace(corrected, receiver_qubits[l]);
            t.fidelity = fidelity(t.receiver_state, targets[l]);
        }
        records.push_back(std::move(record));
    });
    std::sort(records.begin(), records.end(),
              [](const BranchRecord &a, const BranchRecord &b) { return a.key < b.key; });
    return records;
}

std::vector<ProtocolTranscript> run_controlled_teleport(const MessageSpec &spec, const NetworkShape &shape,
                                                        const RunMode &mode, const ProtocolOptions &options) {
    if (shape.receivers() != 1) {
        throw std::invalid_argument("run_controlled_teleport needs exactly one receiver");
    }
    if (spec.size() != shape.messages_for(0)) {
        throw std::invalid_argument("message spec has " + std::to_string(spec.size()) + " qubits, shape expects " +
                                    std::to_string(shape.messages_for(0)));
    }
    auto records = run_protocol(std::span(&spec, 1), shape, mode, options);
    std::vector<ProtocolTranscript> out;
    out.reserve(records.size());
    for (auto &r : records) {
        out.push_back(std::move(r.receivers.front()));
    }
    return out;
}

std::vector<BranchRecord> run_multi_receiver(std::span<const MessageSpec> specs, const NetworkShape &shape,
                                             const RunMode &mode, const ProtocolOptions &options) {
    if (shape.receivers() < 2) {
        throw std::invalid_argument("run_multi_receiver needs at least two receivers");
    }
    if (specs.size() != shape.receivers()) {
        throw std::invalid_argument("got " + std::to_string(specs.size()) + " message specs for " +
                                    std::to_string(shape.receivers()) + " receivers");
    }
    return run_protocol(specs, shape, mode, options);
}

}  // namespace ctele
