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


#include "ctele/baseline.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ctele/gates.hpp"

namespace ctele {

namespace {

struct CopyLeaf {
    BellOutcome outcome;
    std::vector<int> bits;
    PauliOp correction;
    double probability;
    DensityMatrix receiver;
};

std::vector<Complex> kron(std::span<const Complex> low, std::size_t low_dim, std::span<const Complex> high,
                          std::size_t high_dim) {
    // |high><high| (x) |low><low| with `low` on the least significant bits.
    const std::size_t dim = low_dim * high_dim;
    std::vector<Complex> out(dim * dim);
    for (std::size_t hr = 0; hr < high_dim; ++hr) {
        for (std::size_t hc = 0; hc < high_dim; ++hc) {
            const Complex h = high[hr * high_dim + hc];
            for (std::size_t lr = 0; lr < low_dim; ++lr) {
                for (std::size_t lc = 0; lc < low_dim; ++lc) {
                    out[(hr * low_dim + lr) * dim + hc * low_dim + lc] = h * low[lr * low_dim + lc];
                }
            }
        }
    }
    return out;
}

}  // namespace

PauliOp baseline_correction(BellOutcome outcome, int agent_parity) {
    PauliOp base = PauliOp::I;
    switch (outcome) {
    case BellOutcome::PhiPlus:
        base = PauliOp::I;
        break;
    case BellOutcome::PhiMinus:
        base = PauliOp::Z;
        break;
    case BellOutcome::PsiPlus:
        base = PauliOp::X;
        break;
    case BellOutcome::PsiMinus:
        base = PauliOp::Y;
        break;
    }
    return compose((agent_parity & 1) ? PauliOp::Z : PauliOp::I, base);
}

StateVector prepare_baseline_copy(const QubitMessage &message, std::size_t agents) {
    if (agents == 0) {
        throw std::invalid_argument("baseline needs at least one agent");
    }
    std::vector<std::size_t> ghz_qubits{BaselineLayout::kSender, BaselineLayout::kReceiver};
    for (std::size_t j = 0; j < agents; ++j) {
        ghz_qubits.push_back(BaselineLayout::agent(j));
    }
    std::vector<ProductFactor> factors;
    factors.push_back({StateVector::from_amplitudes({message.alpha, message.beta}), {BaselineLayout::kMessage}});
    factors.push_back({prepare_ghz(agents + 2, GhzSign::Plus), ghz_qubits});
    return compose_product(BaselineLayout::width(agents), factors);
}

std::vector<Operation> baseline_schedule(std::size_t agents, std::optional<std::size_t> skip_agent) {
    std::vector<Operation> ops{{OpKind::BellMeasurement, BaselineLayout::kMessage, BaselineLayout::kSender, 0}};
    for (std::size_t j = 0; j < agents; ++j) {
        if (skip_agent && *skip_agent == j) {
            continue;
        }
        ops.push_back({OpKind::Hadamard, BaselineLayout::agent(j)});
        ops.push_back({OpKind::MeasureZ, BaselineLayout::agent(j), 0, 1 + j});
    }
    return ops;
}

BaselineRun run_baseline_ghz(const MessageSpec &spec, const NetworkShape &shape, const RunMode &mode) {
    if (shape.receivers() != 1) {
        throw std::invalid_argument("baseline runs support a single receiver");
    }
    if (spec.size() != shape.messages_for(0)) {
        throw std::invalid_argument("message spec has " + std::to_string(spec.size()) + " qubits, shape expects " +
                                    std::to_string(shape.messages_for(0)));
    }
    const std::size_t n = shape.agents();
    const auto schedule = baseline_schedule(n);
    BaselineRun run;
    std::mt19937_64 seeder(std::holds_alternative<Sampled>(mode) ? std::get<Sampled>(mode).seed : 0);

    std::vector<std::vector<CopyLeaf>> per_copy;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto copy = prepare_baseline_copy(spec[i], n);
        run.aux_qubits_allocated += copy.num_qubits() - 1;
        run.bell_measurements += 1;
        RunMode copy_mode = mode;
        if (std::holds_alternative<Sampled>(mode)) {
            copy_mode = Sampled{seeder()};
        }
        std::vector<CopyLeaf> leaves;
        execute(copy, schedule, 1 + n, copy_mode, [&](const MeasurementLeaf &leaf) {
            const auto outcome = static_cast<BellOutcome>(leaf.outcomes[0]);
            std::vector<int> bits(leaf.outcomes.begin() + 1, leaf.outcomes.end());
            int parity = 0;
            for (int b : bits) {
                parity ^= b;
            }
            const auto op = baseline_correction(outcome, parity);
            auto corrected = leaf.state;
            corrected.apply(op, BaselineLayout::kReceiver);
            leaves.push_back({outcome, std::move(bits), op, leaf.probability,
                              partial_trace(corrected, {BaselineLayout::kReceiver})});
        });
        per_copy.push_back(std::move(leaves));
    }
    for (const auto &op : schedule) {
        if (op.kind == OpKind::Hadamard && op.first == BaselineLayout::agent(0)) {
            run.hadamards_per_agent += spec.size();
        }
        if (op.kind == OpKind::MeasureZ && op.first == BaselineLayout::agent(0)) {
            run.measurements_per_agent += spec.size();
            run.bits_per_agent += spec.size();
        }
    }
    run.qubits_per_agent = spec.size();

    const auto target = prepare_message_state(spec);
    std::vector<std::size_t> index(spec.size(), 0);
    while (true) {
        BaselineTranscript t;
        t.branch_probability = 1.0;
        std::vector<Complex> rho{1.0};
        std::size_t dim = 1;
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const auto &leaf = per_copy[i][index[i]];
            t.bell_outcomes.push_back(leaf.outcome);
            t.agent_bits.push_back(leaf.bits);
            t.corrections.push_back(leaf.correction);
            t.branch_probability *= leaf.probability;
            rho = kron(rho, dim, leaf.receiver.entries(), 2);
            dim *= 2;
        }
        t.receiver_state = DensityMatrix::from_entries(spec.size(), std::move(rho));
        t.fidelity = fidelity(t.receiver_state, target);
        run.transcripts.push_back(std::move(t));
        // Odometer with the last copy varying fastest.
        std::size_t pos = spec.size();
        while (pos > 0) {
            --pos;
            if (++index[pos] < per_copy[pos].size()) {
                break;
            }
            index[pos] = 0;
            if (pos == 0) {
                return run;
            }
        }
    }
}

}  // namespace ctele
