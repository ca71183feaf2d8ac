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


#include <gtest/gtest.h>

#include <algorithm>

#include "ctele/accounting.hpp"
#include "ctele/baseline.hpp"
#include "ctele/protocol.hpp"

namespace ctele {
namespace {

std::size_t count_ops(const std::vector<Operation> &ops, OpKind kind, std::optional<std::size_t> qubit = {}) {
    return static_cast<std::size_t>(std::count_if(ops.begin(), ops.end(), [&](const Operation &op) {
        return op.kind == kind && (!qubit || op.first == *qubit);
    }));
}

TEST(Account, OneMessageOneAgent) {
    const auto shape = NetworkShape::single_receiver(1, 1);
    EXPECT_EQ(account(Method::EntanglingProtocol, shape).aux_qubits, 4u);
    EXPECT_EQ(account(Method::GhzBaseline, shape).aux_qubits, 3u);
}

TEST(Account, ThreeMessagesOneAgent) {
    const auto shape = NetworkShape::single_receiver(3, 1);
    EXPECT_EQ(account(Method::EntanglingProtocol, shape).aux_qubits, 8u);
    EXPECT_EQ(account(Method::GhzBaseline, shape).aux_qubits, 9u);
}

TEST(Account, TwoReceivers) {
    const NetworkShape shape({1, 1}, 2);
    const auto e = account(Method::EntanglingProtocol, shape);
    const auto b = account(Method::GhzBaseline, shape);
    EXPECT_EQ(e.aux_qubits, 7u);
    EXPECT_EQ(b.aux_qubits, 8u);
    EXPECT_EQ(e.qubits_per_agent, 1u);
    EXPECT_EQ(b.qubits_per_agent, 2u);
    EXPECT_EQ(e.classical_bits_per_agent_per_receiver, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(b.classical_bits_per_agent_per_receiver, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(e.bell_measurements, b.bell_measurements);
}

TEST(Account, PerReceiverBaselineBits) {
    const NetworkShape shape({2, 3}, 1);
    const auto b = account(Method::GhzBaseline, shape);
    EXPECT_EQ(b.classical_bits_per_agent_per_receiver, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(b.hadamards_per_agent, 5u);
}

TEST(Account, FormulasMatchAllocatedQubits) {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto shape = NetworkShape::single_receiver(m, n);
            const auto resource = prepare_control_resource(shape);
            const auto e = account(Method::EntanglingProtocol, shape);
            EXPECT_EQ(e.aux_qubits, resource.state.num_qubits());
            EXPECT_EQ(e.aux_qubits, resource.registry.size());
            const MessageSpec spec(std::vector<QubitMessage>(m, QubitMessage{1.0, 0.0}));
            const auto system = prepare_protocol_system(std::span(&spec, 1), shape);
            const auto &reg = system.registry;
            const auto ops = protocol_schedule(reg, shape, AgentBasis::HadamardThenZ);
            EXPECT_EQ(e.bell_measurements, count_ops(ops, OpKind::BellMeasurement));
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_EQ(e.hadamards_per_agent, count_ops(ops, OpKind::Hadamard, reg.agent(j)));
                EXPECT_EQ(e.measurements_per_agent, count_ops(ops, OpKind::MeasureZ, reg.agent(j)));
            }
            const ClassicalNetwork net(reg, shape);
            EXPECT_EQ(e.qubits_per_agent, net.party({PartyKind::Agent, 0}).held_qubits.size());
        }
    }
    for (const auto &sizes : std::vector<std::vector<std::size_t>>{{1, 1}, {2, 1}, {1, 2, 1}}) {
        const NetworkShape shape(sizes, 2);
        EXPECT_EQ(account(Method::EntanglingProtocol, shape).aux_qubits,
                  prepare_control_resource(shape).registry.size());
    }
}

TEST(Account, BaselineFormulasMatchRun) {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const MessageSpec spec(std::vector<QubitMessage>(m, QubitMessage{1.0, 0.0}));
            const auto shape = NetworkShape::single_receiver(m, n);
            const auto run = run_baseline_ghz(spec, shape, Sampled{1});
            const auto b = account(Method::GhzBaseline, shape);
            EXPECT_EQ(b.aux_qubits, run.aux_qubits_allocated);
            EXPECT_EQ(b.qubits_per_agent, run.qubits_per_agent);
            EXPECT_EQ(b.hadamards_per_agent, run.hadamards_per_agent);
            EXPECT_EQ(b.measurements_per_agent, run.measurements_per_agent);
            EXPECT_EQ(b.bits_per_agent(), run.bits_per_agent);
            EXPECT_EQ(b.bell_measurements, run.bell_measurements);
        }
    }
}

TEST(Crossover, OneAgentTable) {
    const auto table = crossover_table(1, 1, 5);
    ASSERT_EQ(table.rows.size(), 5u);
    EXPECT_EQ(table.rows[0].entangling.aux_qubits, 4u);
    EXPECT_EQ(table.rows[0].baseline.aux_qubits, 3u);
    EXPECT_FALSE(table.rows[0].dominates);
    EXPECT_TRUE(table.rows[1].aux_equal);
    EXPECT_TRUE(table.rows[1].ops_advantage);
    EXPECT_TRUE(table.rows[1].bits_advantage);
    EXPECT_EQ(table.rows[1].entangling.hadamards_per_agent, 1u);
    EXPECT_EQ(table.rows[1].baseline.hadamards_per_agent, 2u);
    EXPECT_EQ(table.first_dominant_m, 2u);
    EXPECT_EQ(table.first_aux_advantage_m, 3u);
}

TEST(Crossover, ThreeAgentsTenMessages) {
    const auto table = crossover_table(3, 10, 10);
    EXPECT_EQ(table.rows[0].entangling.aux_qubits, 24u);
    EXPECT_EQ(table.rows[0].baseline.aux_qubits, 50u);
}

TEST(Crossover, AdvantageStrictlyIncreasesInM) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto table = crossover_table(n, 1, 12);
        for (std::size_t k = 1; k < table.rows.size(); ++k) {
            const auto gap = [&](std::size_t r) {
                return static_cast<long>(table.rows[r].baseline.aux_qubits) -
                       static_cast<long>(table.rows[r].entangling.aux_qubits);
            };
            EXPECT_LT(gap(k - 1), gap(k));
        }
    }
}

TEST(Crossover, RejectsEmptyRange) {
    EXPECT_THROW(crossover_table(1, 3, 2), std::invalid_argument);
    EXPECT_THROW(crossover_table(1, 0, 2), std::invalid_argument);
}

}  // namespace
}  // namespace ctele
