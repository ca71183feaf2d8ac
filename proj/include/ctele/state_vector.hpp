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
 * Dense state vector over qubits with little-endian basis indexing: bit k of a
 * basis index is the value of qubit k.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ctele/gates.hpp"
#include "ctele/types.hpp"

namespace ctele {

/// Single-qubit ket (amplitude of |0>, amplitude of |1>).
using Ket2 = std::array<Complex, 2>;

class StateVector {
  public:
    /// Hard ceiling on register width; capacity policy lives with callers.
    static constexpr std::size_t kMaxQubits = 30;

    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(std::size_t num_qubits);

    static StateVector basis_state(std::size_t num_qubits, std::uint64_t index);

    /// Builds a state from raw amplitudes and normalizes it. The length must be
    /// a power of two, amplitudes finite, and the norm nonzero.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

    double norm_squared() const;

    /// <this|other>.
    Complex inner_product(const StateVector &other) const;

    /// Applies a 2x2 unitary to `qubit`. Throws on a bad index or a
    /// non-unitary matrix.
    void apply(const Matrix2 &gate, std::size_t qubit);

    /// Permutes and rephases amplitudes directly instead of a matrix product.
    void apply(PauliOp op, std::size_t qubit);

    void multiply_global_phase(Complex phase);

    /// Born probability of finding `qubit` in computational state `bit`.
    double probability(std::size_t qubit, int bit) const;

    /// Collapses `qubit` onto `bit` and renormalizes. Returns the Born weight.
    double project(std::size_t qubit, int bit);

    /// Born probability of the single-qubit ket `ket` (normalized internally).
    double probability_of(std::size_t qubit, const Ket2 &ket) const;

    /// Rank-one projection of `qubit` onto `ket`, then renormalization.
    double project_onto(std::size_t qubit, const Ket2 &ket);

    /// Probabilities of the four Bell outcomes on the ordered pair, indexed by
    /// BellOutcome.
    std::array<double, 4> bell_probabilities(std::size_t first, std::size_t second) const;

    double project_bell(std::size_t first, std::size_t second, BellOutcome outcome);

    /// `this` (low qubits) tensored with `high` (qubits numbered after ours).
    StateVector tensor(const StateVector &high) const;

  private:
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

    void check_qubit(std::size_t qubit) const;
    void check_pair(std::size_t first, std::size_t second) const;
    void rescale(double probability);

    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// A small state placed on chosen qubits of a larger register.
struct ProductFactor {
    StateVector state;
    std::vector<std::size_t> qubits;  // qubits[k] receives bit k of `state`
};

/// Tensor product of factors laid out on arbitrary qubit positions. Every qubit
/// of the register must be covered by exactly one factor.
StateVector compose_product(std::size_t num_qubits, std::span<const ProductFactor> factors);

/// Packs the bits of `index` at positions `qubits` into a dense integer
/// (qubits[0] becomes bit 0).
std::uint64_t gather_bits(std::uint64_t index, std::span<const std::size_t> qubits);

/// Inverse of gather_bits.
std::uint64_t scatter_bits(std::uint64_t packed, std::span<const std::size_t> qubits);

}  // namespace ctele
