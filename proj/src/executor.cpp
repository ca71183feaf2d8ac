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


#include "ctele/executor.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "ctele/gates.hpp"
#include "ctele/measurement.hpp"

namespace ctele {

namespace {

struct Walker {
    std::span<const Operation> schedule;
    const LeafVisitor &visit;
    std::mt19937_64 *engine;
    std::vector<int> outcomes;

    void descend(StateVector state, std::size_t step, double probability) {
        while (step < schedule.size() && schedule[step].kind == OpKind::Hadamard) {
            state.apply(gates::hadamard(), schedule[step].first);
            ++step;
        }
        if (step == schedule.size()) {
            visit(MeasurementLeaf{state, outcomes, probability});
            return;
        }
        const auto &op = schedule[step];
        std::array<double, 4> probs{};
        std::size_t count = 2;
        if (op.kind == OpKind::BellMeasurement) {
            probs = state.bell_probabilities(op.first, op.second);
            count = 4;
        } else if (op.kind == OpKind::MeasureZ) {
            probs[1] = state.probability(op.first, 1);
            probs[0] = 1.0 - probs[1];
        } else {
            probs[1] = state.probability_of(op.first, kMinusKet);
            probs[0] = 1.0 - probs[1];
        }
        auto collapse = [&](StateVector &s, int outcome) {
            switch (op.kind) {
            case OpKind::BellMeasurement:
                return s.project_bell(op.first, op.second, static_cast<BellOutcome>(outcome));
            case OpKind::MeasureZ:
                return s.project(op.first, outcome);
            case OpKind::MeasurePlusMinus:
                return s.project_onto(op.first, outcome == 0 ? kPlusKet : kMinusKet);
            case OpKind::Hadamard:
                break;
            }
            throw std::logic_error("unreachable");
        };
        if (engine != nullptr) {
            const int outcome = OutcomeSelector::sample(*engine).select(std::span(probs.data(), count));
            const double p = collapse(state, outcome);
            outcomes[op.slot] = outcome;
            descend(std::move(state), step + 1, probability * p);
            outcomes[op.slot] = kUnmeasured;
            return;
        }
        int last = -1;
        for (std::size_t k = 0; k < count; ++k) {
            if (probs[k] >= kZeroProbability) {
                last = static_cast<int>(k);
            }
        }
        for (int k = 0; k <= last; ++k) {
            if (probs[static_cast<std::size_t>(k)] < kZeroProbability) {
                continue;
            }
            // The final branch reuses the parent's storage.
            StateVector child = (k == last) ? std::move(state) : state;
            const double p = collapse(child, k);
            outcomes[op.slot] = k;
            descend(std::move(child), step + 1, probability * p);
        }
        outcomes[op.slot] = kUnmeasured;
    }
};

}  // namespace

void execute(StateVector initial, std::span<const Operation> schedule, std::size_t slot_count, const RunMode &mode,
             const LeafVisitor &visit) {
    validate_schedule(schedule);
    for (const auto &op : schedule) {
        if (op.kind != OpKind::Hadamard && op.slot >= slot_count) {
            throw std::out_of_range("outcome slot " + std::to_string(op.slot) + " out of range");
        }
    }
    std::mt19937_64 engine;
    Walker walker{schedule, visit, nullptr, std::vector<int>(slot_count, kUnmeasured)};
    if (const auto *sampled = std::get_if<Sampled>(&mode)) {
        engine.seed(sampled->seed);
        walker.engine = &engine;
    }
    walker.descend(std::move(initial), 0, 1.0);
}

void validate_schedule(std::span<const Operation> schedule) {
    std::set<std::size_t> measured;
    std::set<std::size_t> slots;
    for (const auto &op : schedule) {
        std::vector<std::size_t> touched{op.first};
        if (op.kind == OpKind::BellMeasurement) {
            touched.push_back(op.second);
        }
        for (auto q : touched) {
            if (measured.count(q) != 0) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " is used after being measured");
            }
        }
        if (op.kind != OpKind::Hadamard) {
            if (!slots.insert(op.slot).second) {
                throw std::invalid_argument("outcome slot " + std::to_string(op.slot) + " written twice");
            }
            measured.insert(touched.begin(), touched.end());
        }
    }
}

std::vector<Operation> shuffled_schedule(std::span<const Operation> schedule, std::mt19937_64 &rng) {
    // Chains of operations sharing a qubit keep their internal order.
    std::vector<std::vector<Operation>> chains;
    std::map<std::size_t, std::size_t> chain_of;
    for (const auto &op : schedule) {
        auto it = chain_of.find(op.first);
        if (it == chain_of.end() && op.kind == OpKind::BellMeasurement) {
            it = chain_of.find(op.second);
        }
        std::size_t c = 0;
        if (it == chain_of.end()) {
            c = chains.size();
            chains.emplace_back();
        } else {
            c = it->second;
        }
        chains[c].push_back(op);
        chain_of[op.first] = c;
        if (op.kind == OpKind::BellMeasurement) {
            chain_of[op.second] = c;
        }
    }
    std::vector<std::size_t> cursor(chains.size(), 0);
    std::vector<Operation> out;
    out.reserve(schedule.size());
    while (out.size() < schedule.size()) {
        std::vector<std::size_t> open;
        for (std::size_t c = 0; c < chains.size(); ++c) {
            if (cursor[c] < chains[c].size()) {
                open.push_back(c);
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        const auto c = open[pick(rng)];
        out.push_back(chains[c][cursor[c]++]);
    }
    return out;
}

}  // namespace ctele
