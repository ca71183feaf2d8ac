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

#include "ctele/measurement.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctele {

int OutcomeSelector::select(std::span<const double> probabilities) const {
    if (is_forced()) {
        if (forced_ < 0 || static_cast<std::size_t>(forced_) >= probabilities.size()) {
            throw std::out_of_range("forced outcome " + std::to_string(forced_) + " is not a valid outcome");
        }
        if (probabilities[static_cast<std::size_t>(forced_)] < kZeroProbability) {
            throw ZeroProbabilityBranch("forced outcome " + std::to_string(forced_) + " has zero probability");
        }
        return forced_;
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double draw = uniform(*engine_);
    double cumulative = 0.0;
    int last_possible = -1;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        if (probabilities[k] < kZeroProbability) {
            continue;
        }
        last_possible = static_cast<int>(k);
        cumulative += probabilities[k];
        if (draw < cumulative) {
            return last_possible;
        }
    }
    if (last_possible < 0) {
        throw ZeroProbabilityBranch("no outcome has nonzero probability");
    }
    // Rounding left the cumulative sum slightly below one.
    return last_possible;
}

StateVector apply_single_qubit_gate(StateVector state, std::size_t qubit, const Matrix2 &gate) {
    state.apply(gate, qubit);
    return state;
}

ZMeasurement measure_z(StateVector state, std::size_t qubit, const OutcomeSelector &selector) {
    const double p1 = state.probability(qubit, 1);
    const std::array<double, 2> probs{1.0 - p1, p1};
    const int bit = selector.select(probs);
    const double p = state.project(qubit, bit);
    return {bit, p, std::move(state)};
}

ZMeasurement measure_plus_minus(StateVector state, std::size_t qubit, const OutcomeSelector &selector) {
    const double p_minus = state.probability_of(qubit, kMinusKet);
    const std::array<double, 2> probs{1.0 - p_minus, p_minus};
    const int bit = selector.select(probs);
    const double p = state.project_onto(qubit, bit == 0 ? kPlusKet : kMinusKet);
    return {bit, p, std::move(state)};
}

BellMeasurement measure_bell(StateVector state, std::size_t first, std::size_t second,
                             const OutcomeSelector &selector) {
    const auto probs = state.bell_probabilities(first, second);
    const auto outcome = static_cast<BellOutcome>(selector.select(probs));
    const double p = state.project_bell(first, second, outcome);
    return {outcome, p, std::move(state)};
}

}  // namespace ctele
