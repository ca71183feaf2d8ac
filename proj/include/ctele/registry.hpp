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
#include <optional>
#include <string>
#include <vector>

namespace ctele {

/// Who holds a qubit in the protocol network.
enum class QubitRole { Message, SenderEpr, ReceiverEpr, Agent, SenderGhz };

/// `receiver` and `index` are zero-based. Message and EPR qubits use both;
/// Agent uses `index` only; SenderGhz uses neither.
struct QubitLabel {
    QubitRole role;
    std::size_t receiver = 0;
    std::size_t index = 0;

    friend bool operator==(const QubitLabel &, const QubitLabel &) = default;
};

/// Bidirectional map between protocol roles and simulator qubit indices.
class QubitRegistry {
  public:
    /// Appends a label and returns its qubit index. Duplicate labels throw.
    std::size_t add(const QubitLabel &label);

    std::size_t size() const noexcept { return labels_.size(); }
    const QubitLabel &label(std::size_t qubit) const { return labels_.at(qubit); }
    std::optional<std::size_t> find(const QubitLabel &label) const;

    std::size_t message(std::size_t receiver, std::size_t i) const;
    std::size_t sender_epr(std::size_t receiver, std::size_t i) const;
    std::size_t receiver_epr(std::size_t receiver, std::size_t i) const;
    std::size_t agent(std::size_t j) const;
    std::size_t sender_ghz() const;

    /// Receiver-EPR qubits of `receiver` in message order.
    std::vector<std::size_t> receiver_qubits(std::size_t receiver) const;

    /// Agent qubits in order, then the sender's GHZ qubit.
    std::vector<std::size_t> ghz_qubits() const;

    std::size_t count(QubitRole role) const;

    /// Human-readable name: "1", "1'", "1''", "A1", "a". When the registry
    /// spans several receivers, message and EPR names gain a "R<l>:" prefix.
    std::string name(std::size_t qubit) const;

  private:
    std::size_t require(const QubitLabel &label) const;

    std::vector<QubitLabel> labels_;
};

}  // namespace ctele
