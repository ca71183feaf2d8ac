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


#include "ctele/defection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "ctele/baseline.hpp"
#include "ctele/executor.hpp"
#include "ctele/gates.hpp"

namespace ctele {

namespace {

// Equal up to a global phase.
bool same_up_to_phase(const Matrix2 &a, const Matrix2 &b) {
    std::size_t pivot = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (std::abs(a.m[k]) > std::abs(a.m[pivot])) {
            pivot = k;
        }
    }
    if (std::abs(b.m[pivot]) < 1e-9) {
        return false;
    }
    const Complex phase = a.m[pivot] / b.m[pivot];
    for (std::size_t k = 0; k < 4; ++k) {
        if (std::abs(a.m[k] - phase * b.m[k]) > 1e-9) {
            return false;
        }
    }
    return true;
}

Matrix2 random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Complex a{normal(rng), normal(rng)};
    Complex b{normal(rng), normal(rng)};
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const Complex phase = std::polar(1.0, angle(rng));
    return Matrix2{{a, -phase * std::conj(b), b, phase * std::conj(a)}};
}

StateVector product_of(std::span<const Ket2> kets) {
    std::vector<ProductFactor> factors;
    for (std::size_t i = 0; i < kets.size(); ++i) {
        factors.push_back({StateVector::from_amplitudes({kets[i][0], kets[i][1]}), {i}});
    }
    return compose_product(kets.size(), factors);
}

// (|a><a| + |b><b|) / 2 as raw entries.
std::vector<Complex> equal_mixture(const StateVector &a, const StateVector &b) {
    const std::size_t dim = a.dimension();
    std::vector<Complex> out(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out[r * dim + c] =
                0.5 * (a.amplitude(r) * std::conj(a.amplitude(c)) + b.amplitude(r) * std::conj(b.amplitude(c)));
        }
    }
    return out;
}

double entry_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

// min over all message qubits of 2 |alpha beta|^2, less a 1e-6 relative margin.
double required_gap(std::span<const MessageSpec> messages) {
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto &spec : messages) {
        for (const auto &q : spec.qubits()) {
            smallest = std::min(smallest, 2.0 * std::norm(q.alpha * q.beta));
        }
    }
    return smallest * (1.0 - 1e-6);
}

}  // namespace

std::string_view to_string(DiagonalForm form) {
    switch (form) {
    case DiagonalForm::Direct:
        return "direct";
    case DiagonalForm::Flipped:
        return "flipped";
    case DiagonalForm::Neither:
        return "neither";
    }
    return "?";
}

DiagonalForm expected_form(BellOutcome outcome) {
    return (outcome == BellOutcome::PhiPlus || outcome == BellOutcome::PhiMinus) ? DiagonalForm::Direct
                                                                                 : DiagonalForm::Flipped;
}

DensityMatrix diagonal_form_density(const QubitMessage &message, DiagonalForm form) {
    const double a2 = std::norm(message.alpha);
    const double b2 = std::norm(message.beta);
    if (form == DiagonalForm::Neither) {
        throw std::invalid_argument("no density for DiagonalForm::Neither");
    }
    const bool direct = form == DiagonalForm::Direct;
    const double p0 = direct ? a2 : b2;
    const double p1 = direct ? b2 : a2;
    return DensityMatrix::from_entries(1, {p0 / (p0 + p1), 0.0, 0.0, p1 / (p0 + p1)});
}

DiagonalForm classify_diagonal(const DensityMatrix &rho, const QubitMessage &message, double tolerance) {
    for (auto form : {DiagonalForm::Direct, DiagonalForm::Flipped}) {
        if (rho.max_abs_diff(diagonal_form_density(message, form)) <= tolerance) {
            return form;
        }
    }
    return DiagonalForm::Neither;
}

std::vector<Matrix2> single_qubit_cliffords() {
    std::vector<Matrix2> group{gates::identity()};
    const std::array<Matrix2, 2> generators{gates::hadamard(), gates::phase_s()};
    for (std::size_t head = 0; head < group.size(); ++head) {
        for (const auto &g : generators) {
            const Matrix2 next = g * group[head];
            const bool known = std::any_of(group.begin(), group.end(),
                                           [&](const Matrix2 &m) { return same_up_to_phase(m, next); });
            if (!known) {
                group.push_back(next);
            }
        }
    }
    return group;
}

std::vector<Matrix2> recovery_candidates(std::uint64_t seed, std::size_t random_count) {
    auto out = single_qubit_cliffords();
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) {
        out.push_back(random_unitary(rng));
    }
    return out;
}

double best_recovery_fidelity(const DensityMatrix &rho, const StateVector &target,
                              std::span<const Matrix2> candidates) {
    double best = 0.0;
    for (const auto &u : candidates) {
        best = std::max(best, fidelity(rho.conjugated(u), target));
    }
    return best;
}

DefectionReport analyze_defection(std::span<const MessageSpec> messages, const NetworkShape &shape,
                                  std::size_t defector) {
    if (defector >= shape.agents()) {
        throw std::out_of_range("defector " + std::to_string(defector + 1) + " is not one of the " +
                                std::to_string(shape.agents()) + " agents");
    }
    const auto system = prepare_protocol_system(messages, shape);
    const auto &registry = system.registry;
    const auto schedule = protocol_schedule(registry, shape, AgentBasis::HadamardThenZ, defector);
    const SlotLayout slots{shape.total_messages(), shape.agents()};

    DefectionReport report;
    report.defector = defector;
    using Key = std::tuple<std::size_t, std::size_t, BellOutcome>;
    std::map<Key, DensityMatrix> first_seen;

    execute(system.state, schedule, slots.count(), Enumerate{}, [&](const MeasurementLeaf &leaf) {
        DefectionBranch branch;
        branch.key.assign(leaf.outcomes.begin(), leaf.outcomes.end());
        branch.probability = leaf.probability;
        std::size_t pair = 0;
        for (std::size_t l = 0; l < shape.receivers(); ++l) {
            for (std::size_t i = 0; i < shape.messages_for(l); ++i, ++pair) {
                const auto &msg = messages[l][i];
                QubitDefectionStats s;
                s.receiver = l;
                s.qubit = i;
                s.outcome = static_cast<BellOutcome>(leaf.outcomes[slots.bell(pair)]);
                s.density = partial_trace(leaf.state, {registry.receiver_epr(l, i)});
                s.off_diagonal = s.density.off_diagonal_norm();
                s.form = classify_diagonal(s.density, msg, 1e-12);
                s.form_error = s.density.max_abs_diff(diagonal_form_density(msg, expected_form(s.outcome)));
                s.raw_fidelity = fidelity(s.density, messages[l].qubit_state(i));

                report.max_off_diagonal = std::max(report.max_off_diagonal, s.off_diagonal);
                report.max_form_error = std::max(report.max_form_error, s.form_error);
                // Direct and Flipped coincide when |alpha| = |beta|.
                const bool ambiguous = std::abs(std::norm(msg.alpha) - std::norm(msg.beta)) <= 1e-12;
                if (!ambiguous && s.form != expected_form(s.outcome)) {
                    report.forms_match_outcomes = false;
                }
                if (ambiguous && s.form == DiagonalForm::Neither) {
                    report.forms_match_outcomes = false;
                }
                const Key key{l, i, s.outcome};
                const auto it = first_seen.find(key);
                if (it == first_seen.end()) {
                    first_seen.emplace(key, s.density);
                } else {
                    report.max_locality_deviation =
                        std::max(report.max_locality_deviation, it->second.max_abs_diff(s.density));
                }
                branch.qubits.push_back(std::move(s));
            }
        }
        report.branches.push_back(std::move(branch));
    });
    std::sort(report.branches.begin(), report.branches.end(),
              [](const DefectionBranch &a, const DefectionBranch &b) { return a.key < b.key; });

    const auto candidates = recovery_candidates();
    const double gap_bound = required_gap(messages);
    for (const auto &[key, rho] : first_seen) {
        const auto &[l, i, outcome] = key;
        RecoveryResult r;
        r.receiver = l;
        r.qubit = i;
        r.outcome = outcome;
        r.best_fidelity = best_recovery_fidelity(rho, messages[l].qubit_state(i), candidates);
        r.ceiling = rho.max_eigenvalue();
        r.required_gap = gap_bound;
        r.gap = 1.0 - r.best_fidelity;
        report.recovery.push_back(r);
    }
    return report;
}

DefectionReport analyze_defection(const MessageSpec &spec, const NetworkShape &shape, std::size_t defector) {
    return analyze_defection(std::span(&spec, 1), shape, defector);
}

TwoPartyReport analyze_two_party_defection(const MessageSpec &spec, const NetworkShape &shape) {
    if (shape.agents() != 1 || shape.receivers() != 1) {
        throw std::invalid_argument("two-party defection needs one agent and one receiver");
    }
    if (spec.size() != shape.messages_for(0)) {
        throw std::invalid_argument("message spec does not match the shape");
    }
    const auto system = prepare_protocol_system(std::span(&spec, 1), shape);
    const auto &registry = system.registry;
    const auto schedule = protocol_schedule(registry, shape, AgentBasis::HadamardThenZ, 0);
    const SlotLayout slots{shape.total_messages(), 1};
    const auto receiver = registry.receiver_qubits(0);
    const std::size_t m = spec.size();

    TwoPartyReport report;
    execute(system.state, schedule, slots.count(), Enumerate{}, [&](const MeasurementLeaf &leaf) {
        TwoPartyBranch b;
        std::vector<Ket2> psi;
        std::vector<Ket2> psi_prime;
        for (std::size_t i = 0; i < m; ++i) {
            const auto outcome = static_cast<BellOutcome>(leaf.outcomes[slots.bell(i)]);
            b.bell_outcomes.push_back(outcome);
            psi.push_back(conditional_receiver_qubit(spec[i], outcome, Branch::Psi));
            psi_prime.push_back(conditional_receiver_qubit(spec[i], outcome, Branch::PsiPrime));
        }
        b.sender_ghz_bit = leaf.outcomes[slots.sender()];
        b.probability = leaf.probability;
        b.receiver_state = partial_trace(leaf.state, receiver);

        const auto a = product_of(psi);
        const auto c = product_of(psi_prime);
        const std::size_t dim = a.dimension();
        std::vector<Complex> formula(dim * dim, Complex{0.0, 0.0});
        for (double sign : {1.0, -1.0}) {
            for (std::size_t r = 0; r < dim; ++r) {
                const Complex vr = a.amplitude(r) + sign * c.amplitude(r);
                for (std::size_t col = 0; col < dim; ++col) {
                    const Complex vc = a.amplitude(col) + sign * c.amplitude(col);
                    formula[r * dim + col] += vr * std::conj(vc);
                }
            }
        }
        Complex trace{0.0, 0.0};
        for (std::size_t r = 0; r < dim; ++r) {
            trace += formula[r * dim + r];
        }
        for (auto &z : formula) {
            z /= trace;
        }
        b.formula_error = entry_diff(b.receiver_state.entries(), formula);
        report.max_formula_error = std::max(report.max_formula_error, b.formula_error);
        report.branches.push_back(std::move(b));
    });
    std::map<std::vector<BellOutcome>, const DensityMatrix *> by_outcomes;
    for (const auto &b : report.branches) {
        const auto [it, inserted] = by_outcomes.emplace(b.bell_outcomes, &b.receiver_state);
        if (!inserted) {
            report.max_sender_bit_dependence =
                std::max(report.max_sender_bit_dependence, it->second->max_abs_diff(b.receiver_state));
        }
    }
    return report;
}

BaselineDefectionReport analyze_baseline_defection(const MessageSpec &spec, const NetworkShape &shape,
                                                   std::size_t defector) {
    if (shape.receivers() != 1 || spec.size() != shape.messages_for(0)) {
        throw std::invalid_argument("baseline defection needs one receiver and a matching spec");
    }
    if (defector >= shape.agents()) {
        throw std::out_of_range("defector " + std::to_string(defector + 1) + " is not one of the " +
                                std::to_string(shape.agents()) + " agents");
    }
    const std::size_t n = shape.agents();
    const auto schedule = baseline_schedule(n, defector);
    BaselineDefectionReport report;
    report.defector = defector;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto copy = prepare_baseline_copy(spec[i], n);
        execute(copy, schedule, 1 + n, Enumerate{}, [&](const MeasurementLeaf &leaf) {
            BaselineDefectionEntry e;
            e.copy = i;
            e.outcome = static_cast<BellOutcome>(leaf.outcomes[0]);
            e.agent_bits.assign(leaf.outcomes.begin() + 1, leaf.outcomes.end());
            e.probability = leaf.probability;
            e.density = partial_trace(leaf.state, {BaselineLayout::kReceiver});
            e.off_diagonal = e.density.off_diagonal_norm();
            e.form_error = e.density.max_abs_diff(diagonal_form_density(spec[i], expected_form(e.outcome)));
            report.max_off_diagonal = std::max(report.max_off_diagonal, e.off_diagonal);
            report.max_form_error = std::max(report.max_form_error, e.form_error);
            report.entries.push_back(std::move(e));
        });
    }
    return report;
}

EntangledInfoReport entangled_info_check(const MessageSpec &spec, const NetworkShape &shape) {
    if (spec.size() != 2 || shape.receivers() != 1 || shape.messages_for(0) != 2) {
        throw std::invalid_argument("entangled-information check needs exactly two message qubits and one receiver");
    }
    auto system = prepare_protocol_system(std::span(&spec, 1), shape);
    const auto &registry = system.registry;
    auto &state = system.state;
    for (std::size_t i = 0; i < 2; ++i) {
        state.project_bell(registry.message(0, i), registry.sender_epr(0, i), BellOutcome::PhiPlus);
    }
    const std::size_t r1 = registry.receiver_epr(0, 0);
    const std::size_t r2 = registry.receiver_epr(0, 1);
    const auto &q1 = spec[0];
    const auto &q2 = spec[1];

    EntangledInfoReport report;
    const Ket2 plus1{q1.alpha, q1.beta};
    const Ket2 minus1{q1.alpha, -q1.beta};
    const auto plus2 = StateVector::from_amplitudes({q2.alpha, q2.beta});
    const auto minus2 = StateVector::from_amplitudes({q2.alpha, -q2.beta});
    report.projector_overlap = std::norm(std::conj(plus1[0]) * minus1[0] + std::conj(plus1[1]) * minus1[1]);

    auto plus_state = state;
    report.plus_probability = plus_state.project_onto(r1, plus1);
    report.plus_fidelity = fidelity(partial_trace(plus_state, {r2}), plus2);
    auto minus_state = state;
    report.minus_probability = minus_state.project_onto(r1, minus1);
    report.minus_fidelity = fidelity(partial_trace(minus_state, {r2}), minus2);

    const std::array<Ket2, 2> psi{plus1, Ket2{q2.alpha, q2.beta}};
    const std::array<Ket2, 2> psi_prime{minus1, Ket2{q2.alpha, -q2.beta}};
    const auto mixture = equal_mixture(product_of(psi), product_of(psi_prime));
    const std::vector<std::size_t> keep{r1, r2};
    report.mixture_error = entry_diff(partial_trace(state, keep).entries(), mixture);
    return report;
}

}  // namespace ctele
