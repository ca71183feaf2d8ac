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

#include "ctele/gates.hpp"

#include <algorithm>
#include <cmath>

namespace ctele {

std::string_view to_string(PauliOp op) {
    switch (op) {
    case PauliOp::I:
        return "I";
    case PauliOp::X:
        return "X";
    case PauliOp::Y:
        return "Y";
    case PauliOp::Z:
        return "Z";
    }
    return "?";
}

std::string_view to_string(BellOutcome outcome) {
    switch (outcome) {
    case BellOutcome::PhiPlus:
        return "phi+";
    case BellOutcome::PhiMinus:
        return "phi-";
    case BellOutcome::PsiPlus:
        return "psi+";
    case BellOutcome::PsiMinus:
        return "psi-";
    }
    return "?";
}

std::optional<PauliOp> parse_pauli(std::string_view text) {
    for (auto op : kPauliOps) {
        if (to_string(op) == text) {
            return op;
        }
    }
    return std::nullopt;
}

std::optional<BellOutcome> parse_bell_outcome(std::string_view text) {
    for (auto outcome : kBellOutcomes) {
        if (to_string(outcome) == text) {
            return outcome;
        }
    }
    return std::nullopt;
}

Matrix2 Matrix2::adjoint() const {
    Matrix2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out(r, c) = std::conj((*this)(c, r));
        }
    }
    return out;
}

Matrix2 operator*(const Matrix2 &a, const Matrix2 &b) {
    Matrix2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
        }
    }
    return out;
}

double Matrix2::max_abs_diff(const Matrix2 &other) const {
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(m[k] - other.m[k]));
    }
    return worst;
}

bool Matrix2::is_unitary(double tolerance) const {
    for (const auto &z : m) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return ((*this) * adjoint()).max_abs_diff(gates::identity()) <= tolerance;
}

namespace gates {

Matrix2 identity() { return Matrix2{{1.0, 0.0, 0.0, 1.0}}; }
Matrix2 pauli_x() { return Matrix2{{0.0, 1.0, 1.0, 0.0}}; }
Matrix2 pauli_y() { return Matrix2{{0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}}; }
Matrix2 pauli_z() { return Matrix2{{1.0, 0.0, 0.0, -1.0}}; }
Matrix2 phase_s() { return Matrix2{{1.0, 0.0, 0.0, Complex{0.0, 1.0}}}; }

Matrix2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return Matrix2{{s, s, s, -s}};
}

Matrix2 pauli(PauliOp op) {
    switch (op) {
    case PauliOp::I:
        return identity();
    case PauliOp::X:
        return pauli_x();
    case PauliOp::Y:
        return pauli_y();
    case PauliOp::Z:
        return pauli_z();
    }
    return identity();
}

}  // namespace gates

PauliOp compose(PauliOp after, PauliOp before) {
    // Up to phase the Paulis form Z2 x Z2 with X=(1,0), Z=(0,1), Y=(1,1).
    auto bits = [](PauliOp p) -> unsigned {
        switch (p) {
        case PauliOp::I:
            return 0;
        case PauliOp::X:
            return 1;
        case PauliOp::Z:
            return 2;
        case PauliOp::Y:
            return 3;
        }
        return 0;
    };
    static constexpr std::array<PauliOp, 4> from_bits{PauliOp::I, PauliOp::X, PauliOp::Z,
                                                      PauliOp::Y};
    return from_bits[bits(after) ^ bits(before)];
}

}  // namespace ctele
