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


#include "ctele/accounting.hpp"

#include <numeric>
#include <stdexcept>

namespace ctele {

std::string_view to_string(Method method) {
    return method == Method::EntanglingProtocol ? "entangling" : "ghz_baseline";
}

std::size_t ResourceReport::bits_per_agent() const {
    return std::accumulate(classical_bits_per_agent_per_receiver.begin(), classical_bits_per_agent_per_receiver.end(),
                           std::size_t{0});
}

ResourceReport account(Method method, const NetworkShape &shape) {
    const std::size_t total = shape.total_messages();
    const std::size_t n = shape.agents();
    ResourceReport r;
    r.method = method;
    r.bell_measurements = total;
    if (method == Method::EntanglingProtocol) {
        r.aux_qubits = 2 * total + n + 1;
        r.qubits_per_agent = 1;
        r.hadamards_per_agent = 1;
        r.measurements_per_agent = 1;
        // One broadcast bit reaches every receiver.
        r.classical_bits_per_agent_per_receiver.assign(shape.receivers(), 1);
        r.sender_hadamards = 1;
        r.sender_measurements = 1;
        r.sender_classical_bits = 2 * total + shape.receivers();
    } else {
        r.aux_qubits = total * (n + 2);
        r.qubits_per_agent = total;
        r.hadamards_per_agent = total;
        r.measurements_per_agent = total;
        for (auto m_l : shape.receiver_sizes()) {
            r.classical_bits_per_agent_per_receiver.push_back(m_l);
        }
        r.sender_classical_bits = 2 * total;
    }
    return r;
}

CrossoverRow compare_methods(const NetworkShape &shape) {
    CrossoverRow row;
    row.entangling = account(Method::EntanglingProtocol, shape);
    row.baseline = account(Method::GhzBaseline, shape);
    const auto &e = row.entangling;
    const auto &b = row.baseline;
    row.aux_advantage = e.aux_qubits < b.aux_qubits;
    row.aux_equal = e.aux_qubits == b.aux_qubits;
    row.ops_advantage = e.operations_per_agent() < b.operations_per_agent();
    row.bits_advantage = e.bits_per_agent() < b.bits_per_agent();
    const bool no_worse = e.aux_qubits <= b.aux_qubits && e.qubits_per_agent <= b.qubits_per_agent &&
                          e.operations_per_agent() <= b.operations_per_agent() &&
                          e.bits_per_agent() <= b.bits_per_agent();
    const bool some_better =
        row.aux_advantage || e.qubits_per_agent < b.qubits_per_agent || row.ops_advantage || row.bits_advantage;
    row.dominates = no_worse && some_better;
    return row;
}

CrossoverTable crossover_table(std::size_t agents, std::size_t m_first, std::size_t m_last, std::size_t receivers) {
    if (m_first == 0 || m_last < m_first) {
        throw std::invalid_argument("message range must be nonempty and start at 1 or more");
    }
    if (receivers == 0) {
        throw std::invalid_argument("need at least one receiver");
    }
    CrossoverTable table;
    table.agents = agents;
    table.receivers = receivers;
    for (std::size_t m = m_first; m <= m_last; ++m) {
        const NetworkShape shape(std::vector<std::size_t>(receivers, m), agents);
        auto row = compare_methods(shape);
        row.m = m;
        if (row.dominates && !table.first_dominant_m) {
            table.first_dominant_m = m;
        }
        if (row.aux_advantage && !table.first_aux_advantage_m) {
            table.first_aux_advantage_m = m;
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace ctele
