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
#include <functional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "ctele/state_vector.hpp"

namespace ctele {

enum class OpKind { BellMeasurement, Hadamard, MeasureZ, MeasurePlusMinus };

/// One scheduled step. `second` is used by BellMeasurement only. Measurements
/// store their outcome in `slot`.
struct Operation {
    OpKind kind;
    std::size_t first;
    std::size_t second = 0;
    std::size_t slot = 0;
};

/// Follow every branch with nonzero probability.
struct Enumerate {};

/// Follow one branch drawn from a seeded engine.
struct Sampled {
    std::uint64_t seed;
};

using RunMode = std::variant<Enumerate, Sampled>;

/// Outcome slots never written by the schedule hold this value.
inline constexpr int kUnmeasured = -1;

/// A fully measured branch. References are valid only inside the visitor.
struct MeasurementLeaf {
    const StateVector &state;
    std::span<const int> outcomes;
    double probability;
};

using LeafVisitor = std::function<void(const MeasurementLeaf &)>;

/// Runs `schedule` on `initial`, calling `visit` once per leaf. Branches below
/// kZeroProbability are pruned. Leaves are produced depth-first.
void execute(StateVector initial, std::span<const Operation> schedule, std::size_t slot_count, const RunMode &mode,
             const LeafVisitor &visit);

/// Throws std::invalid_argument unless every measured qubit's Hadamard (if
/// any) precedes its measurement and no qubit is measured twice.
void validate_schedule(std::span<const Operation> schedule);

/// Random interleaving of `schedule` that keeps the relative order of
/// operations touching the same qubit.
std::vector<Operation> shuffled_schedule(std::span<const Operation> schedule, std::mt19937_64 &rng);

}  // namespace ctele
