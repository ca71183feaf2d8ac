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


#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace ctele::cli {

namespace {

Json bell_list(std::span<const BellOutcome> outcomes) {
    Json out = Json::array();
    for (auto o : outcomes) {
        out.push_back(std::string(to_string(o)));
    }
    return out;
}

Json pauli_list(std::span<const PauliOp> ops) {
    Json out = Json::array();
    for (auto op : ops) {
        out.push_back(std::string(to_string(op)));
    }
    return out;
}

Json message_json(const ScenarioConfig &cfg) {
    Json msg;
    switch (cfg.source) {
        case MessageSource::Preset:
            msg["source"] = "preset";
            msg["preset"] = cfg.preset;
            break;
        case MessageSource::Random:
            msg["source"] = "random";
            msg["random_seed"] = cfg.message_seed;
            break;
        case MessageSource::Explicit:
            msg["source"] = "amplitudes";
            msg["max_normalization"] = round15(cfg.max_normalization);
            break;
    }
    Json qubits = Json::array();
    for (std::size_t l = 0; l < cfg.messages.size(); ++l) {
        for (std::size_t i = 0; i < cfg.messages[l].size(); ++i) {
            const auto &q = cfg.messages[l][i];
            qubits.push_back(Json{{"receiver", l + 1}, {"index", i + 1}, {"alpha", to_json(q.alpha)},
                                  {"beta", to_json(q.beta)}});
        }
    }
    msg["qubits"] = std::move(qubits);
    return msg;
}

Json inbox_json(const std::vector<ClassicalMessage> &inbox) {
    Json out = Json::array();
    for (const auto &m : inbox) {
        Json entry{{"from", to_string(m.from)}};
        if (const auto *bell = std::get_if<BellOutcome>(&m.payload)) {
            entry["payload"] = std::string(to_string(*bell));
        } else {
            entry["payload"] = std::get<int>(m.payload);
        }
        if (m.subject) {
            entry["subject"] = *m.subject + 1;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

double round15(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.15g", value);
    const double out = std::strtod(buffer, nullptr);
    return out == 0.0 ? 0.0 : out;
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

Json to_json(Complex z) { return Json::array({round15(z.real()), round15(z.imag())}); }

Json to_json(const DensityMatrix &rho) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < rho.dimension(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < rho.dimension(); ++c) {
            row.push_back(to_json(rho(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const ResourceReport &r) {
    return Json{{"method", std::string(to_string(r.method))},
                {"aux_qubits", r.aux_qubits},
                {"qubits_per_agent", r.qubits_per_agent},
                {"hadamards_per_agent", r.hadamards_per_agent},
                {"measurements_per_agent", r.measurements_per_agent},
                {"operations_per_agent", r.operations_per_agent()},
                {"bits_per_agent_per_receiver", r.classical_bits_per_agent_per_receiver},
                {"bits_per_agent", r.bits_per_agent()},
                {"bell_measurements", r.bell_measurements},
                {"sender_hadamards", r.sender_hadamards},
                {"sender_measurements", r.sender_measurements},
                {"sender_classical_bits", r.sender_classical_bits}};
}

Json to_json(const NetworkShape &shape) {
    std::vector<std::size_t> sizes(shape.receiver_sizes().begin(), shape.receiver_sizes().end());
    return Json{{"receivers", shape.receivers()}, {"messages_per_receiver", sizes}, {"agents", shape.agents()}};
}

Json run_header(const ScenarioConfig &cfg) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "run";
    doc["method"] = std::string(to_string(cfg.method));
    doc["shape"] = to_json(cfg.shape);
    if (const auto *sampled = std::get_if<Sampled>(&cfg.mode)) {
        doc["mode"] = Json{{"kind", "sampled"}, {"seed", sampled->seed}};
    } else {
        doc["mode"] = Json{{"kind", "enumerate"}};
    }
    doc["defector"] = cfg.defector ? Json(*cfg.defector + 1) : Json(nullptr);
    doc["message"] = message_json(cfg);
    doc["resources"] = to_json(account(cfg.method, cfg.shape));
    return doc;
}

Json branches_json(const std::vector<BranchRecord> &records) {
    Json out = Json::array();
    for (const auto &rec : records) {
        Json receivers = Json::array();
        for (const auto &t : rec.receivers) {
            receivers.push_back(Json{{"receiver", t.receiver + 1},
                                     {"bell_outcomes", bell_list(t.bell_outcomes)},
                                     {"agent_bits", t.agent_bits},
                                     {"sender_bit", t.sender_ghz_bit},
                                     {"branch", std::string(to_string(t.branch))},
                                     {"corrections", pauli_list(t.corrections)},
                                     {"fidelity", round15(t.fidelity)},
                                     {"received", inbox_json(t.inbox)}});
        }
        out.push_back(Json{{"key", rec.key}, {"probability", round15(rec.probability)}, {"receivers", receivers}});
    }
    return out;
}

Json baseline_branches_json(const BaselineRun &run) {
    Json out = Json::array();
    for (const auto &t : run.transcripts) {
        out.push_back(Json{{"bell_outcomes", bell_list(t.bell_outcomes)},
                           {"agent_bits", t.agent_bits},
                           {"corrections", pauli_list(t.corrections)},
                           {"probability", round15(t.branch_probability)},
                           {"fidelity", round15(t.fidelity)}});
    }
    return out;
}

Json defection_json(const DefectionReport &report) {
    Json branches = Json::array();
    for (const auto &b : report.branches) {
        Json qubits = Json::array();
        for (const auto &q : b.qubits) {
            qubits.push_back(Json{{"receiver", q.receiver + 1},
                                  {"qubit", q.qubit + 1},
                                  {"bell_outcome", std::string(to_string(q.outcome))},
                                  {"density", to_json(q.density)},
                                  {"off_diagonal", round15(q.off_diagonal)},
                                  {"form", std::string(to_string(q.form))},
                                  {"expected_form", std::string(to_string(expected_form(q.outcome)))},
                                  {"form_error", round15(q.form_error)},
                                  {"raw_fidelity", round15(q.raw_fidelity)}});
        }
        branches.push_back(Json{{"key", b.key}, {"probability", round15(b.probability)}, {"qubits", qubits}});
    }
    Json recovery = Json::array();
    for (const auto &r : report.recovery) {
        recovery.push_back(Json{{"receiver", r.receiver + 1},
                                {"qubit", r.qubit + 1},
                                {"bell_outcome", std::string(to_string(r.outcome))},
                                {"best_fidelity", round15(r.best_fidelity)},
                                {"ceiling", round15(r.ceiling)},
                                {"gap", round15(r.gap)},
                                {"required_gap", round15(r.required_gap)},
                                {"gap_met", r.gap >= r.required_gap}});
    }
    return Json{{"defector", report.defector + 1},
                {"branches", branches},
                {"max_off_diagonal", round15(report.max_off_diagonal)},
                {"max_form_error", round15(report.max_form_error)},
                {"max_locality_deviation", round15(report.max_locality_deviation)},
                {"forms_match_outcomes", report.forms_match_outcomes},
                {"recovery", recovery}};
}

Json baseline_defection_json(const BaselineDefectionReport &report) {
    Json entries = Json::array();
    for (const auto &e : report.entries) {
        entries.push_back(Json{{"copy", e.copy + 1},
                               {"bell_outcome", std::string(to_string(e.outcome))},
                               {"agent_bits", e.agent_bits},
                               {"probability", round15(e.probability)},
                               {"density", to_json(e.density)},
                               {"off_diagonal", round15(e.off_diagonal)},
                               {"form_error", round15(e.form_error)}});
    }
    return Json{{"defector", report.defector + 1},
                {"entries", entries},
                {"max_off_diagonal", round15(report.max_off_diagonal)},
                {"max_form_error", round15(report.max_form_error)}};
}

namespace {

Json row_json(const CrossoverRow &row) {
    return Json{{"entangling", to_json(row.entangling)},
                {"baseline", to_json(row.baseline)},
                {"aux_advantage", row.aux_advantage},
                {"aux_equal", row.aux_equal},
                {"ops_advantage", row.ops_advantage},
                {"bits_advantage", row.bits_advantage},
                {"dominates", row.dominates}};
}

Json optional_json(const std::optional<std::size_t> &v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json crossover_json(const CrossoverTable &table) {
    Json rows = Json::array();
    for (const auto &row : table.rows) {
        Json entry{{"m", row.m}};
        entry.update(row_json(row));
        rows.push_back(std::move(entry));
    }
    return Json{{"schema_version", kSchemaVersion},
                {"command", "compare"},
                {"agents", table.agents},
                {"receivers", table.receivers},
                {"rows", rows},
                {"first_dominant_m", optional_json(table.first_dominant_m)},
                {"first_aux_advantage_m", optional_json(table.first_aux_advantage_m)}};
}

Json comparison_json(const NetworkShape &shape, const CrossoverRow &row) {
    Json entry{{"shape", to_json(shape)}};
    entry.update(row_json(row));
    return Json{{"schema_version", kSchemaVersion},
                {"command", "compare"},
                {"agents", shape.agents()},
                {"receivers", shape.receivers()},
                {"rows", Json::array({entry})}};
}

std::string crossover_text(const std::vector<CrossoverRow> &rows, const std::vector<std::string> &labels) {
    std::ostringstream out;
    auto pair = [](std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); };
    out << std::left << std::setw(10) << "m" << std::setw(12) << "aux" << std::setw(14) << "qubits/agent"
        << std::setw(12) << "ops/agent" << std::setw(12) << "bits/agent" << "flags\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        std::string flags;
        auto flag = [&flags](bool on, const char *name) {
            if (on) {
                flags += flags.empty() ? name : std::string(",") + name;
            }
        };
        flag(r.aux_advantage, "aux_advantage");
        flag(r.aux_equal, "aux_equal");
        flag(r.ops_advantage, "ops_advantage");
        flag(r.bits_advantage, "bits_advantage");
        flag(r.dominates, "dominates");
        out << std::setw(10) << labels[i] << std::setw(12) << pair(r.entangling.aux_qubits, r.baseline.aux_qubits)
            << std::setw(14) << pair(r.entangling.qubits_per_agent, r.baseline.qubits_per_agent) << std::setw(12)
            << pair(r.entangling.operations_per_agent(), r.baseline.operations_per_agent()) << std::setw(12)
            << pair(r.entangling.bits_per_agent(), r.baseline.bits_per_agent()) << (flags.empty() ? "-" : flags)
            << "\n";
    }
    out << "columns: entangling vs ghz_baseline\n";
    return out.str();
}

}  // namespace ctele::cli
