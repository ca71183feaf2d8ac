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


#include "ctele/resources.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctele {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_distinct(std::span<const std::size_t> qubits, std::size_t num_qubits) {
    std::vector<bool> seen(num_qubits, false);
    for (auto q : qubits) {
        if (q >= num_qubits) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
        }
        if (seen[q]) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
        }
        seen[q] = true;
    }
}

// Product of EPR pairs with relative sign `sign`, tensored with the GHZ state
// of the same sign, laid out per `registry`. Unit norm.
StateVector signed_term(const QubitRegistry &registry, const NetworkShape &shape, GhzSign sign) {
    std::vector<ProductFactor> factors;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        for (std::size_t i = 0; i < shape.messages_for(l); ++i) {
            factors.push_back({prepare_ghz(2, sign), {registry.sender_epr(l, i), registry.receiver_epr(l, i)}});
        }
    }
    factors.push_back({prepare_ghz(shape.agents() + 1, sign), registry.ghz_qubits()});
    return compose_product(registry.size(), factors);
}

QubitRegistry resource_registry(const NetworkShape &shape) {
    QubitRegistry registry;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        for (std::size_t i = 0; i < shape.messages_for(l); ++i) {
            registry.add({QubitRole::SenderEpr, l, i});
        }
        for (std::size_t i = 0; i < shape.messages_for(l); ++i) {
            registry.add({QubitRole::ReceiverEpr, l, i});
        }
    }
    for (std::size_t j = 0; j < shape.agents(); ++j) {
        registry.add({QubitRole::Agent, 0, j});
    }
    registry.add({QubitRole::SenderGhz, 0, 0});
    return registry;
}

}  // namespace

MessageSpec::MessageSpec(std::vector<QubitMessage> qubits) : qubits_(std::move(qubits)) {
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        const auto &q = qubits_[i];
        if (!finite(q.alpha) || !finite(q.beta)) {
            throw std::invalid_argument("message qubit " + std::to_string(i + 1) + " has non-finite amplitudes");
        }
        const double norm = std::norm(q.alpha) + std::norm(q.beta);
        if (std::abs(norm - 1.0) > kNormTolerance) {
            throw std::invalid_argument("message qubit " + std::to_string(i + 1) +
                                        " is not normalized (|alpha|^2 + |beta|^2 = " + std::to_string(norm) + ")");
        }
    }
}

MessageSpec MessageSpec::random(std::size_t m, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<QubitMessage> qubits;
    for (std::size_t i = 0; i < m; ++i) {
        Complex a;
        Complex b;
        double norm = 0.0;
        do {
            a = {normal(rng), normal(rng)};
            b = {normal(rng), normal(rng)};
            norm = std::sqrt(std::norm(a) + std::norm(b));
        } while (norm < 1e-6);
        qubits.push_back({a / norm, b / norm});
    }
    return MessageSpec(std::move(qubits));
}

MessageSpec::Normalized MessageSpec::normalizing(std::vector<QubitMessage> qubits) {
    double worst = 0.0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        auto &q = qubits[i];
        if (!finite(q.alpha) || !finite(q.beta)) {
            throw std::invalid_argument("message qubit " + std::to_string(i + 1) + " has non-finite amplitudes");
        }
        const double norm = std::sqrt(std::norm(q.alpha) + std::norm(q.beta));
        if (norm == 0.0) {
            throw std::invalid_argument("message qubit " + std::to_string(i + 1) + " has zero amplitudes");
        }
        worst = std::max(worst, std::abs(1.0 - norm));
        q.alpha /= norm;
        q.beta /= norm;
    }
    return {MessageSpec(std::move(qubits)), worst};
}

bool MessageSpec::full_support(double threshold) const {
    return std::all_of(qubits_.begin(), qubits_.end(), [threshold](const QubitMessage &q) {
        return std::abs(q.alpha) > threshold && std::abs(q.beta) > threshold;
    });
}

StateVector MessageSpec::qubit_state(std::size_t i) const {
    const auto &q = qubits_.at(i);
    return StateVector::from_amplitudes({q.alpha, q.beta});
}

NetworkShape::NetworkShape(std::vector<std::size_t> receiver_sizes, std::size_t agents)
    : sizes_(std::move(receiver_sizes)), agents_(agents) {
    if (sizes_.empty()) {
        throw std::invalid_argument("network needs at least one receiver (k >= 1)");
    }
    for (std::size_t l = 0; l < sizes_.size(); ++l) {
        if (sizes_[l] == 0) {
            throw std::invalid_argument("receiver " + std::to_string(l + 1) + " needs at least one message qubit");
        }
    }
    if (agents_ == 0) {
        throw std::invalid_argument("network needs at least one agent (n >= 1)");
    }
}

std::size_t NetworkShape::total_messages() const noexcept {
    std::size_t total = 0;
    for (auto s : sizes_) {
        total += s;
    }
    return total;
}

StateVector prepare_message_state(const MessageSpec &spec) {
    if (spec.size() == 0) {
        throw std::invalid_argument("message spec is empty");
    }
    std::vector<ProductFactor> factors;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        factors.push_back({spec.qubit_state(i), {i}});
    }
    return compose_product(spec.size(), factors);
}

StateVector prepare_ghz(std::size_t width, GhzSign sign) {
    if (width < 2) {
        throw std::invalid_argument("GHZ state needs at least 2 qubits");
    }
    if (width > StateVector::kMaxQubits) {
        throw std::invalid_argument("GHZ state too wide");
    }
    std::vector<Complex> amps(std::size_t{1} << width, Complex{0.0, 0.0});
    amps.front() = 1.0;
    amps.back() = sign == GhzSign::Plus ? 1.0 : -1.0;
    return StateVector::from_amplitudes(std::move(amps));
}

RegisteredState prepare_control_resource(const NetworkShape &shape) {
    auto registry = resource_registry(shape);
    if (registry.size() > StateVector::kMaxQubits) {
        throw std::invalid_argument("control resource exceeds " + std::to_string(StateVector::kMaxQubits) + " qubits");
    }
    const auto plus = signed_term(registry, shape, GhzSign::Plus);
    const auto minus = signed_term(registry, shape, GhzSign::Minus);
    std::vector<Complex> sum(plus.dimension());
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = plus.amplitude(i) + minus.amplitude(i);
    }
    return {StateVector::from_amplitudes(std::move(sum)), std::move(registry)};
}

RegisteredState prepare_protocol_system(std::span<const MessageSpec> messages, const NetworkShape &shape) {
    if (messages.size() != shape.receivers()) {
        throw std::invalid_argument("got message specs for " + std::to_string(messages.size()) +
                                    " receivers, shape has " + std::to_string(shape.receivers()));
    }
    QubitRegistry registry;
    std::vector<ProductFactor> factors;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        if (messages[l].size() != shape.messages_for(l)) {
            throw std::invalid_argument("receiver " + std::to_string(l + 1) + " expects " +
                                        std::to_string(shape.messages_for(l)) + " message qubits, spec has " +
                                        std::to_string(messages[l].size()));
        }
        for (std::size_t i = 0; i < messages[l].size(); ++i) {
            const auto q = registry.add({QubitRole::Message, l, i});
            factors.push_back({messages[l].qubit_state(i), {q}});
        }
    }
    const std::size_t offset = registry.size();
    auto resource = prepare_control_resource(shape);
    if (offset + resource.registry.size() > StateVector::kMaxQubits) {
        throw std::invalid_argument("protocol system exceeds " + std::to_string(StateVector::kMaxQubits) + " qubits");
    }
    for (std::size_t q = 0; q < resource.registry.size(); ++q) {
        registry.add(resource.registry.label(q));
    }
    const auto message_state = compose_product(offset, factors);
    return {message_state.tensor(resource.state), std::move(registry)};
}

ParityClass parity_of(std::uint64_t bits) {
    return std::popcount(bits) % 2 == 0 ? ParityClass::Even : ParityClass::Odd;
}

ParityWeights parity_decompose(const StateVector &state, std::span<const std::size_t> qubits) {
    check_distinct(qubits, state.num_qubits());
    ParityWeights out;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double w = std::norm(amps[i]);
        if (parity_of(gather_bits(i, qubits)) == ParityClass::Even) {
            out.even += w;
        } else {
            out.odd += w;
        }
    }
    return out;
}

ParitySectors parity_sectors(const StateVector &state, std::span<const std::size_t> group, std::size_t tag) {
    std::vector<std::size_t> all(group.begin(), group.end());
    all.push_back(tag);
    check_distinct(all, state.num_qubits());
    ParitySectors out;
    for (auto &row : out.sectors) {
        for (auto &s : row) {
            s.min_magnitude = std::numeric_limits<double>::infinity();
        }
    }
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double mag = std::abs(amps[i]);
        const auto parity = static_cast<std::size_t>(parity_of(gather_bits(i, group)));
        auto &s = out.sectors[parity][(i >> tag) & 1u];
        s.weight += mag * mag;
        if (mag >= kSupportThreshold) {
            ++s.support;
            s.min_magnitude = std::min(s.min_magnitude, mag);
            s.max_magnitude = std::max(s.max_magnitude, mag);
        }
    }
    for (auto &row : out.sectors) {
        for (auto &s : row) {
            if (s.support == 0) {
                s.min_magnitude = 0.0;
            }
        }
    }
    return out;
}

}  // namespace ctele
