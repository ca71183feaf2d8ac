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

#include "ctele/state_vector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctele {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_width(std::size_t num_qubits) {
    if (num_qubits > StateVector::kMaxQubits) {
        throw std::invalid_argument("StateVector: " + std::to_string(num_qubits) +
                                    " qubits exceeds the supported maximum of " +
                                    std::to_string(StateVector::kMaxQubits));
    }
}

Ket2 normalized(const Ket2 &ket) {
    const double norm = std::sqrt(std::norm(ket[0]) + std::norm(ket[1]));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("single-qubit ket must have a finite nonzero norm");
    }
    return {ket[0] / norm, ket[1] / norm};
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis_state(std::size_t num_qubits, std::uint64_t index) {
    StateVector state(num_qubits);
    if (index >= state.dimension()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[index] = 1.0;
    return state;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t size = amplitudes.size();
    if (size == 0 || !std::has_single_bit(size)) {
        throw std::invalid_argument("amplitude count must be a power of two, got " +
                                    std::to_string(size));
    }
    const auto num_qubits = static_cast<std::size_t>(std::countr_zero(size));
    check_width(num_qubits);
    double norm2 = 0.0;
    for (const auto &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitudes must be finite");
        }
        norm2 += std::norm(a);
    }
    if (norm2 < kZeroProbability) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

Complex StateVector::inner_product(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        total += cmul(std::conj(amplitudes_[i]), other.amplitudes_[i]);
    }
    return total;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for " +
                                std::to_string(num_qubits_) + "-qubit state");
    }
}

void StateVector::check_pair(std::size_t first, std::size_t second) const {
    check_qubit(first);
    check_qubit(second);
    if (first == second) {
        throw std::invalid_argument("Bell measurement needs two distinct qubits");
    }
}

void StateVector::rescale(double probability) {
    const double scale = 1.0 / std::sqrt(probability);
    for (auto &a : amplitudes_) {
        a *= scale;
    }
}

void StateVector::apply(const Matrix2 &gate, std::size_t qubit) {
    check_qubit(qubit);
    if (!gate.is_unitary()) {
        throw std::invalid_argument("gate matrix is not unitary");
    }
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amplitudes_.size();
    const Complex g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            const Complex v0 = amplitudes_[j];
            const Complex v1 = amplitudes_[j + stride];
            amplitudes_[j] = cmul(g00, v0) + cmul(g01, v1);
            amplitudes_[j + stride] = cmul(g10, v0) + cmul(g11, v1);
        }
    }
}

void StateVector::apply(PauliOp op, std::size_t qubit) {
    check_qubit(qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amplitudes_.size();
    auto pairs = [&](auto &&kernel) {
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t j = base; j < base + stride; ++j) {
                kernel(amplitudes_[j], amplitudes_[j + stride]);
            }
        }
    };
    switch (op) {
    case PauliOp::I:
        return;
    case PauliOp::X:
        pairs([](Complex &v0, Complex &v1) { std::swap(v0, v1); });
        return;
    case PauliOp::Y:
        // [[0, -i], [i, 0]]: (v0, v1) -> (-i v1, i v0).
        pairs([](Complex &v0, Complex &v1) {
            const Complex a = v0;
            v0 = {v1.imag(), -v1.real()};
            v1 = {-a.imag(), a.real()};
        });
        return;
    case PauliOp::Z:
        pairs([](Complex &, Complex &v1) { v1 = -v1; });
        return;
    }
}

void StateVector::multiply_global_phase(Complex phase) {
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
        throw std::invalid_argument("global phase must have unit modulus");
    }
    for (auto &a : amplitudes_) {
        a *= phase;
    }
}

double StateVector::probability(std::size_t qubit, int bit) const {
    check_qubit(qubit);
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const std::uint64_t want = bit ? mask : 0;
    double total = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) == want) {
            total += std::norm(amplitudes_[i]);
        }
    }
    return total;
}

double StateVector::project(std::size_t qubit, int bit) {
    const double p = probability(qubit, bit);
    if (p < kZeroProbability) {
        throw ZeroProbabilityBranch("qubit " + std::to_string(qubit) + " has zero probability of " +
                                    std::to_string(bit));
    }
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const std::uint64_t want = bit ? mask : 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) != want) {
            amplitudes_[i] = 0.0;
        }
    }
    rescale(p);
    return p;
}

double StateVector::probability_of(std::size_t qubit, const Ket2 &ket) const {
    check_qubit(qubit);
    const Ket2 v = normalized(ket);
    const std::size_t stride = std::size_t{1} << qubit;
    double total = 0.0;
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            const Complex c =
                cmul(std::conj(v[0]), amplitudes_[j]) + cmul(std::conj(v[1]), amplitudes_[j + stride]);
            total += std::norm(c);
        }
    }
    return total;
}

double StateVector::project_onto(std::size_t qubit, const Ket2 &ket) {
    const double p = probability_of(qubit, ket);
    if (p < kZeroProbability) {
        throw ZeroProbabilityBranch("projection of qubit " + std::to_string(qubit) +
                                    " has zero probability");
    }
    const Ket2 v = normalized(ket);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            const Complex c =
                cmul(std::conj(v[0]), amplitudes_[j]) + cmul(std::conj(v[1]), amplitudes_[j + stride]);
            amplitudes_[j] = cmul(v[0], c);
            amplitudes_[j + stride] = cmul(v[1], c);
        }
    }
    rescale(p);
    return p;
}

std::array<double, 4> StateVector::bell_probabilities(std::size_t first, std::size_t second) const {
    check_pair(first, second);
    const std::uint64_t fmask = std::uint64_t{1} << first;
    const std::uint64_t smask = std::uint64_t{1} << second;
    std::array<double, 4> probs{};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & (fmask | smask)) != 0) {
            continue;
        }
        const Complex a00 = amplitudes_[i];
        const Complex a01 = amplitudes_[i | smask];
        const Complex a10 = amplitudes_[i | fmask];
        const Complex a11 = amplitudes_[i | fmask | smask];
        probs[0] += 0.5 * std::norm(a00 + a11);
        probs[1] += 0.5 * std::norm(a00 - a11);
        probs[2] += 0.5 * std::norm(a01 + a10);
        probs[3] += 0.5 * std::norm(a01 - a10);
    }
    return probs;
}

double StateVector::project_bell(std::size_t first, std::size_t second, BellOutcome outcome) {
    const double p = bell_probabilities(first, second)[static_cast<std::size_t>(outcome)];
    if (p < kZeroProbability) {
        throw ZeroProbabilityBranch("Bell outcome " + std::string(to_string(outcome)) +
                                    " has zero probability");
    }
    const std::uint64_t fmask = std::uint64_t{1} << first;
    const std::uint64_t smask = std::uint64_t{1} << second;
    const bool phi = outcome == BellOutcome::PhiPlus || outcome == BellOutcome::PhiMinus;
    const double sign = (outcome == BellOutcome::PhiPlus || outcome == BellOutcome::PsiPlus) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & (fmask | smask)) != 0) {
            continue;
        }
        Complex &a00 = amplitudes_[i];
        Complex &a01 = amplitudes_[i | smask];
        Complex &a10 = amplitudes_[i | fmask];
        Complex &a11 = amplitudes_[i | fmask | smask];
        if (phi) {
            // Component along (|00> + sign|11>)/sqrt2, re-expanded.
            const Complex c = kInvSqrt2 * (a00 + sign * a11);
            a00 = kInvSqrt2 * c;
            a11 = sign * kInvSqrt2 * c;
            a01 = 0.0;
            a10 = 0.0;
        } else {
            const Complex c = kInvSqrt2 * (a01 + sign * a10);
            a01 = kInvSqrt2 * c;
            a10 = sign * kInvSqrt2 * c;
            a00 = 0.0;
            a11 = 0.0;
        }
    }
    rescale(p);
    return p;
}

StateVector StateVector::tensor(const StateVector &high) const {
    check_width(num_qubits_ + high.num_qubits_);
    std::vector<Complex> out(dimension() * high.dimension());
    for (std::size_t h = 0; h < high.dimension(); ++h) {
        for (std::size_t l = 0; l < dimension(); ++l) {
            out[(h << num_qubits_) | l] = cmul(amplitudes_[l], high.amplitudes_[h]);
        }
    }
    return StateVector(num_qubits_ + high.num_qubits_, std::move(out));
}

std::uint64_t gather_bits(std::uint64_t index, std::span<const std::size_t> qubits) {
    std::uint64_t packed = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        packed |= ((index >> qubits[k]) & 1u) << k;
    }
    return packed;
}

std::uint64_t scatter_bits(std::uint64_t packed, std::span<const std::size_t> qubits) {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        index |= ((packed >> k) & 1u) << qubits[k];
    }
    return index;
}

StateVector compose_product(std::size_t num_qubits, std::span<const ProductFactor> factors) {
    check_width(num_qubits);
    std::vector<int> owner(num_qubits, -1);
    for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto &factor = factors[f];
        if (factor.qubits.size() != factor.state.num_qubits()) {
            throw std::invalid_argument("product factor qubit list does not match its state width");
        }
        for (auto q : factor.qubits) {
            if (q >= num_qubits) {
                throw std::out_of_range("product factor qubit " + std::to_string(q) + " out of range");
            }
            if (owner[q] != -1) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " covered by two factors");
            }
            owner[q] = static_cast<int>(f);
        }
    }
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (owner[q] == -1) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " not covered by any factor");
        }
    }
    std::vector<Complex> out(std::size_t{1} << num_qubits);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Complex value{1.0, 0.0};
        for (const auto &factor : factors) {
            value *= factor.state.amplitudes()[gather_bits(i, factor.qubits)];
            if (value == Complex{0.0, 0.0}) {
                break;
            }
        }
        out[i] = value;
    }
    return StateVector::from_amplitudes(std::move(out));
}

}  // namespace ctele
