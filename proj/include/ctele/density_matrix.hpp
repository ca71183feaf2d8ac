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
#include <span>
#include <vector>

#include "ctele/gates.hpp"
#include "ctele/state_vector.hpp"

namespace ctele {

/// Reduced or full density operator, stored row-major. Basis indexing follows
/// StateVector (bit k of a row index is the value of local qubit k).
class DensityMatrix {
  public:
    /// Validation tolerances applied by from_entries.
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;
    static constexpr double kPsdTolerance = 1e-10;

    static DensityMatrix from_state(const StateVector &state);

    /// Checked constructor: rejects operators that are not Hermitian, not
    /// unit trace, or not positive semidefinite within the tolerances above.
    static DensityMatrix from_entries(std::size_t num_qubits, std::vector<Complex> row_major);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::span<const Complex> entries() const noexcept { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dimension_ + col]; }

    Complex trace() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;
    double max_eigenvalue() const;

    /// Frobenius norm of the off-diagonal part.
    double off_diagonal_norm() const;

    double max_abs_diff(const DensityMatrix &other) const;

    /// <ket|rho|ket>, real part (the imaginary part vanishes for Hermitian rho).
    double expectation(const StateVector &ket) const;

    /// U rho U^dagger for a single-qubit operator.
    DensityMatrix conjugated(const Matrix2 &unitary) const;

  private:
    DensityMatrix(std::size_t num_qubits, std::vector<Complex> entries);

    friend DensityMatrix partial_trace(const StateVector &, std::span<const std::size_t>);
    friend DensityMatrix partial_trace(const DensityMatrix &, std::span<const std::size_t>);

    std::size_t num_qubits_;
    std::size_t dimension_;
    std::vector<Complex> entries_;
};

/// Reduced density operator of the qubits in `keep`, in the given order
/// (keep[0] becomes local qubit 0). `keep` must be nonempty, in range and
/// duplicate-free.
DensityMatrix partial_trace(const StateVector &state, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep);

inline DensityMatrix partial_trace(const StateVector &state, std::initializer_list<std::size_t> keep) {
    return partial_trace(state, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector &a, const StateVector &b);

/// <b|rho|b>.
double fidelity(const DensityMatrix &rho, const StateVector &b);

}  // namespace ctele
