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
#include <random>
#include <span>
#include <vector>

#include "ctele/registry.hpp"
#include "ctele/state_vector.hpp"

namespace ctele {

/// One message qubit alpha|0> + beta|1>.
struct QubitMessage {
    Complex alpha;
    Complex beta;

    Ket2 ket() const { return {alpha, beta}; }
};

/// Ordered list of single-qubit messages, each normalized within
/// kNormTolerance.
class MessageSpec {
  public:
    static constexpr double kNormTolerance = 1e-12;

    MessageSpec() = default;

    /// Throws std::invalid_argument on an unnormalized or non-finite pair.
    explicit MessageSpec(std::vector<QubitMessage> qubits);

    /// Haar-random qubits drawn from `rng`.
    static MessageSpec random(std::size_t m, std::mt19937_64 &rng);

    struct Normalized;
    /// Rescales each pair to unit norm; reports the largest |1 - norm|.
    static Normalized normalizing(std::vector<QubitMessage> qubits);

    std::size_t size() const noexcept { return qubits_.size(); }
    const QubitMessage &operator[](std::size_t i) const { return qubits_.at(i); }
    std::span<const QubitMessage> qubits() const noexcept { return qubits_; }

    /// True when every qubit has |alpha|, |beta| above `threshold`.
    bool full_support(double threshold = 1e-9) const;

    /// Single-qubit state of message i.
    StateVector qubit_state(std::size_t i) const;

  private:
    std::vector<QubitMessage> qubits_;
};

struct MessageSpec::Normalized {
    MessageSpec spec;
    double max_correction;
};

/// Message-qubit counts per receiver and agent count.
class NetworkShape {
  public:
    NetworkShape(std::vector<std::size_t> receiver_sizes, std::size_t agents);

    static NetworkShape single_receiver(std::size_t m, std::size_t agents) { return NetworkShape({m}, agents); }

    std::size_t receivers() const noexcept { return sizes_.size(); }
    std::size_t agents() const noexcept { return agents_; }
    std::size_t messages_for(std::size_t receiver) const { return sizes_.at(receiver); }
    std::span<const std::size_t> receiver_sizes() const noexcept { return sizes_; }
    std::size_t total_messages() const noexcept;

  private:
    std::vector<std::size_t> sizes_;
    std::size_t agents_;
};

enum class GhzSign { Plus, Minus };

/// A state together with the role of each of its qubits.
struct RegisteredState {
    StateVector state;
    QubitRegistry registry;
};

/// Product state with message i on qubit i.
StateVector prepare_message_state(const MessageSpec &spec);

/// (|0...0> +/- |1...1>)/sqrt2 on `width` qubits.
StateVector prepare_ghz(std::size_t width, GhzSign sign);

/// Control resource
///   (prod EPR+ (x) GHZ+  +  prod EPR- (x) GHZ-) / sqrt2
/// with EPR+/- = (|00> +/- |11>)/sqrt2 on each (sender, receiver) pair and the
/// GHZ state over the agents and the sender's GHZ qubit. Layout: per receiver
/// l, the sender-EPR qubits then the receiver-EPR qubits; then agents A1..An;
/// then the sender's GHZ qubit.
RegisteredState prepare_control_resource(const NetworkShape &shape);

/// Messages of every receiver (receiver-major) on the low qubits, then the
/// control resource. `messages[l]` must have shape.messages_for(l) qubits.
RegisteredState prepare_protocol_system(std::span<const MessageSpec> messages, const NetworkShape &shape);

enum class ParityClass { Even, Odd };

ParityClass parity_of(std::uint64_t bits);

struct ParityWeights {
    double even = 0.0;
    double odd = 0.0;
};

/// Probability mass on even- and odd-weight bitstrings of `qubits`.
ParityWeights parity_decompose(const StateVector &state, std::span<const std::size_t> qubits);

/// Amplitude statistics of one (parity class, tag bit) sector.
struct SectorStats {
    double weight = 0.0;
    std::size_t support = 0;
    double min_magnitude = 0.0;
    double max_magnitude = 0.0;
};

/// Sector table indexed [parity class][tag bit].
struct ParitySectors {
    std::array<std::array<SectorStats, 2>, 2> sectors{};

    const SectorStats &at(ParityClass parity, int tag) const {
        return sectors[static_cast<std::size_t>(parity)][static_cast<std::size_t>(tag)];
    }
};

/// Splits the state by (parity of `group`, value of `tag`). Amplitudes with
/// magnitude below kSupportThreshold do not count towards support.
inline constexpr double kSupportThreshold = 1e-12;
ParitySectors parity_sectors(const StateVector &state, std::span<const std::size_t> group, std::size_t tag);

}  // namespace ctele
