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
#include <random>
#include <span>

#include "ctele/gates.hpp"
#include "ctele/state_vector.hpp"

namespace ctele {

/// Chooses a measurement outcome: either draws from a seeded engine or
/// returns a caller-fixed branch. A forced selector throws
/// ZeroProbabilityBranch if its branch is impossible.
class OutcomeSelector {
  public:
    static OutcomeSelector sample(std::mt19937_64 &engine) { return OutcomeSelector(&engine, 0); }
    static OutcomeSelector force(int outcome) { return OutcomeSelector(nullptr, outcome); }

    bool is_forced() const noexcept { return engine_ == nullptr; }

    int select(std::span<const double> probabilities) const;

  private:
    OutcomeSelector(std::mt19937_64 *engine, int forced) : engine_(engine), forced_(forced) {}

    std::mt19937_64 *engine_;
    int forced_;
};

struct ZMeasurement {
    int bit;
    double probability;
    StateVector state;
};

struct BellMeasurement {
    BellOutcome outcome;
    double probability;
    StateVector state;
};

StateVector apply_single_qubit_gate(StateVector state, std::size_t qubit, const Matrix2 &gate);

ZMeasurement measure_z(StateVector state, std::size_t qubit, const OutcomeSelector &selector);

/// Measurement in the |+>, |-> basis; bit 0 <=> |+>.
ZMeasurement measure_plus_minus(StateVector state, std::size_t qubit, const OutcomeSelector &selector);

BellMeasurement measure_bell(StateVector state, std::size_t first, std::size_t second,
                             const OutcomeSelector &selector);

inline const Ket2 kPlusKet{0.70710678118654752440, 0.70710678118654752440};
inline const Ket2 kMinusKet{0.70710678118654752440, -0.70710678118654752440};

}  // namespace ctele
