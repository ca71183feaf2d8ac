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

#include <array>
#include <cstddef>

#include "ctele/types.hpp"

namespace ctele {

/// Row-major 2x2 complex matrix.
struct Matrix2 {
    std::array<Complex, 4> m{};

    Complex operator()(std::size_t row, std::size_t col) const { return m[2 * row + col]; }
    Complex &operator()(std::size_t row, std::size_t col) { return m[2 * row + col]; }

    Matrix2 adjoint() const;
    bool is_unitary(double tolerance = 1e-12) const;
    double max_abs_diff(const Matrix2 &other) const;

    friend Matrix2 operator*(const Matrix2 &a, const Matrix2 &b);
    friend bool operator==(const Matrix2 &, const Matrix2 &) = default;
};

namespace gates {

Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_y();  // [[0, -i], [i, 0]]
Matrix2 pauli_z();
Matrix2 hadamard();
Matrix2 phase_s();
Matrix2 pauli(PauliOp op);

}  // namespace gates

/// Product `after * before` of two Paulis with the global phase dropped.
PauliOp compose(PauliOp after, PauliOp before);

}  // namespace ctele
