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
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace ctele {

using Complex = std::complex<double>;

/// Single-qubit Pauli operators. Matrices are the standard ones, so each is
/// exactly self-inverse (see gates::pauli).
enum class PauliOp : std::uint8_t { I, X, Y, Z };

/// The four Bell states of an ordered qubit pair (first, second):
///   PhiPlus/PhiMinus = (|00> +/- |11>)/sqrt2
///   PsiPlus/PsiMinus = (|01> +/- |10>)/sqrt2
/// where the left digit is the first qubit of the pair.
enum class BellOutcome : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes{
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus,
    BellOutcome::PsiMinus};

inline constexpr std::array<PauliOp, 4> kPauliOps{PauliOp::I, PauliOp::X,
                                                  PauliOp::Y, PauliOp::Z};

/// Complex product without the out-of-line inf/nan recovery of operator*.
inline Complex cmul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

std::string_view to_string(PauliOp op);
std::string_view to_string(BellOutcome outcome);

std::optional<PauliOp> parse_pauli(std::string_view text);
std::optional<BellOutcome> parse_bell_outcome(std::string_view text);

/// Probabilities below this are treated as impossible branches.
inline constexpr double kZeroProbability = 1e-14;

/// Thrown when a caller asks to collapse onto a branch of (numerically) zero
/// probability.
class ZeroProbabilityBranch : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace ctele
