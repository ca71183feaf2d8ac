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


#include "ctele/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctele {

std::size_t QubitRegistry::add(const QubitLabel &label) {
    if (find(label)) {
        throw std::invalid_argument("qubit label registered twice: " + std::to_string(static_cast<int>(label.role)));
    }
    labels_.push_back(label);
    return labels_.size() - 1;
}

std::optional<std::size_t> QubitRegistry::find(const QubitLabel &label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t QubitRegistry::require(const QubitLabel &label) const {
    const auto q = find(label);
    if (!q) {
        throw std::out_of_range("no qubit registered for the requested role");
    }
    return *q;
}

std::size_t QubitRegistry::message(std::size_t receiver, std::size_t i) const {
    return require({QubitRole::Message, receiver, i});
}

std::size_t QubitRegistry::sender_epr(std::size_t receiver, std::size_t i) const {
    return require({QubitRole::SenderEpr, receiver, i});
}

std::size_t QubitRegistry::receiver_epr(std::size_t receiver, std::size_t i) const {
    return require({QubitRole::ReceiverEpr, receiver, i});
}

std::size_t QubitRegistry::agent(std::size_t j) const { return require({QubitRole::Agent, 0, j}); }

std::size_t QubitRegistry::sender_ghz() const { return require({QubitRole::SenderGhz, 0, 0}); }

std::vector<std::size_t> QubitRegistry::receiver_qubits(std::size_t receiver) const {
    std::vector<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t q = 0; q < labels_.size(); ++q) {
        const auto &l = labels_[q];
        if (l.role == QubitRole::ReceiverEpr && l.receiver == receiver) {
            found.emplace_back(l.index, q);
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<std::size_t> out;
    for (const auto &[index, q] : found) {
        out.push_back(q);
    }
    return out;
}

std::vector<std::size_t> QubitRegistry::ghz_qubits() const {
    std::vector<std::size_t> out;
    const std::size_t agents = count(QubitRole::Agent);
    for (std::size_t j = 0; j < agents; ++j) {
        out.push_back(agent(j));
    }
    out.push_back(sender_ghz());
    return out;
}

std::size_t QubitRegistry::count(QubitRole role) const {
    return static_cast<std::size_t>(
        std::count_if(labels_.begin(), labels_.end(), [role](const QubitLabel &l) { return l.role == role; }));
}

std::string QubitRegistry::name(std::size_t qubit) const {
    const auto &l = label(qubit);
    const bool multi = std::any_of(labels_.begin(), labels_.end(), [](const QubitLabel &x) {
        return x.role != QubitRole::Agent && x.role != QubitRole::SenderGhz && x.receiver > 0;
    });
    const std::string prefix = multi ? "R" + std::to_string(l.receiver + 1) + ":" : "";
    const std::string number = std::to_string(l.index + 1);
    switch (l.role) {
    case QubitRole::Message:
        return prefix + number;
    case QubitRole::SenderEpr:
        return prefix + number + "'";
    case QubitRole::ReceiverEpr:
        return prefix + number + "''";
    case QubitRole::Agent:
        return "A" + number;
    case QubitRole::SenderGhz:
        return "a";
    }
    return "?";
}

}  // namespace ctele
