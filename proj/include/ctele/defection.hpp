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
 * What receivers can learn when one agent withholds its measurement and bit.
 *
 * The defector's GHZ qubit is never measured and is traced out. For every
 * branch of the remaining measurements each receiver qubit is reduced to a
 * 2x2 operator; with full cooperation absent, that operator is expected to be
 * diagonal, carrying amplitude information only.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ctele/density_matrix.hpp"
#include "ctele/protocol.hpp"
#include "ctele/resources.hpp"

namespace ctele {

/// Diagonal shapes a withheld receiver qubit can take:
///   Direct  = |alpha|^2 |0><0| + |beta|^2 |1><1|
///   Flipped = |beta|^2 |0><0| + |alpha|^2 |1><1|
enum class DiagonalForm { Direct, Flipped, Neither };

std::string_view to_string(DiagonalForm form);

/// Expected form for a pair's Bell outcome: Direct for phi+/-, Flipped for
/// psi+/-.
DiagonalForm expected_form(BellOutcome outcome);

DensityMatrix diagonal_form_density(const QubitMessage &message, DiagonalForm form);

/// Direct or Flipped if `rho` matches it within `tolerance` (Direct wins ties,
/// which happen when |alpha| = |beta|), otherwise Neither.
DiagonalForm classify_diagonal(const DensityMatrix &rho, const QubitMessage &message, double tolerance);

struct QubitDefectionStats {
    std::size_t receiver = 0;
    std::size_t qubit = 0;
    BellOutcome outcome = BellOutcome::PhiPlus;
    DensityMatrix density = DensityMatrix::from_state(StateVector(1));
    double off_diagonal = 0.0;
    DiagonalForm form = DiagonalForm::Neither;
    /// max |rho - expected_form(outcome) density|.
    double form_error = 0.0;
    /// <psi|rho|psi> with no recovery applied.
    double raw_fidelity = 0.0;
};

struct DefectionBranch {
    /// Outcome slots as in the protocol; the defector's slot is kUnmeasured.
    std::vector<int> key;
    double probability = 0.0;
    std::vector<QubitDefectionStats> qubits;
};

/// Best fidelity reachable by a finite family of single-qubit unitaries.
struct RecoveryResult {
    std::size_t receiver = 0;
    std::size_t qubit = 0;
    BellOutcome outcome = BellOutcome::PhiPlus;
    double best_fidelity = 0.0;
    /// Largest eigenvalue of rho: no unitary can exceed it.
    double ceiling = 0.0;
    /// Smallest 2 |alpha beta|^2 over every message qubit of the run, times
    /// (1 - 1e-6).
    double required_gap = 0.0;
    double gap = 0.0;
};

struct DefectionReport {
    std::size_t defector = 0;
    std::vector<DefectionBranch> branches;
    double max_off_diagonal = 0.0;
    double max_form_error = 0.0;
    /// Largest spread of a qubit's operator across branches sharing that
    /// qubit's own Bell outcome.
    double max_locality_deviation = 0.0;
    bool forms_match_outcomes = true;
    std::vector<RecoveryResult> recovery;
};

inline constexpr std::uint64_t kRecoverySeed = 0x5eed0f5eedULL;
inline constexpr std::size_t kRandomRecoveryCount = 1000;

/// The 24 single-qubit Cliffords (generated by H and S, modulo phase).
std::vector<Matrix2> single_qubit_cliffords();

/// Cliffords followed by `random_count` seeded random unitaries.
std::vector<Matrix2> recovery_candidates(std::uint64_t seed = kRecoverySeed,
                                         std::size_t random_count = kRandomRecoveryCount);

/// Largest <target| U rho U^dagger |target> over `candidates`.
double best_recovery_fidelity(const DensityMatrix &rho, const StateVector &target, std::span<const Matrix2> candidates);

DefectionReport analyze_defection(std::span<const MessageSpec> messages, const NetworkShape &shape,
                                  std::size_t defector);

DefectionReport analyze_defection(const MessageSpec &spec, const NetworkShape &shape, std::size_t defector);

struct TwoPartyBranch {
    std::vector<BellOutcome> bell_outcomes;
    int sender_ghz_bit = 0;
    double probability = 0.0;
    DensityMatrix receiver_state = DensityMatrix::from_state(StateVector(1));
    /// max |rho - normalized (psi+psi')(psi+psi')^dagger + (psi-psi')(psi-psi')^dagger|.
    double formula_error = 0.0;
};

struct TwoPartyReport {
    std::vector<TwoPartyBranch> branches;
    double max_formula_error = 0.0;
    /// max |rho(sender bit 0) - rho(sender bit 1)| over equal Bell outcomes.
    double max_sender_bit_dependence = 0.0;
};

/// One-agent network; the agent withholds, the sender measures its GHZ qubit.
TwoPartyReport analyze_two_party_defection(const MessageSpec &spec, const NetworkShape &shape);

struct BaselineDefectionEntry {
    std::size_t copy = 0;
    BellOutcome outcome = BellOutcome::PhiPlus;
    std::vector<int> agent_bits;
    double probability = 0.0;
    DensityMatrix density = DensityMatrix::from_state(StateVector(1));
    double off_diagonal = 0.0;
    double form_error = 0.0;
};

struct BaselineDefectionReport {
    std::size_t defector = 0;
    std::vector<BaselineDefectionEntry> entries;
    double max_off_diagonal = 0.0;
    double max_form_error = 0.0;
};

/// Baseline with one agent withholding all of its bits.
BaselineDefectionReport analyze_baseline_defection(const MessageSpec &spec, const NetworkShape &shape,
                                                   std::size_t defector);

/// Conditional structure of the two receiver qubits with both Bell outcomes
/// fixed to phi+ and no GHZ measurement yet.
struct EntangledInfoReport {
    /// Probability of projecting 1'' onto alpha1|0> +/- beta1|1>.
    double plus_probability = 0.0;
    double minus_probability = 0.0;
    /// Fidelity of 2'' against alpha2|0> +/- beta2|1> after each projection.
    double plus_fidelity = 0.0;
    double minus_fidelity = 0.0;
    /// |<k+|k->|^2 for the two projection kets of qubit 1''.
    double projector_overlap = 0.0;
    /// max |rho(1'',2'') - (psi psi^dagger + psi' psi'^dagger)/2|.
    double mixture_error = 0.0;
};

EntangledInfoReport entangled_info_check(const MessageSpec &spec, const NetworkShape &shape);

}  // namespace ctele
