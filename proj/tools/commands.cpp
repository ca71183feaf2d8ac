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


#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ctele::cli {

namespace {

std::string format_number(double value) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << value;
    return out.str();
}

PropertyCheck check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

PropertyCheck below(std::string name, double measured, double bound) {
    return check(std::move(name), measured < bound, format_number(measured) + " < " + format_number(bound));
}

struct Totals {
    std::size_t branches = 0;
    std::size_t transcripts = 0;
    double probability = 0.0;
    double min_fidelity = 1.0;
};

void add_fidelity_checks(const ScenarioConfig &cfg, const Totals &t, std::vector<PropertyCheck> &checks) {
    checks.push_back(check("fidelity", t.min_fidelity >= 1.0 - kFidelityTolerance,
                           "min " + format_number(t.min_fidelity) + ", bar 1 - " + format_number(kFidelityTolerance)));
    if (cfg.enumerate()) {
        checks.push_back(below("probability_total", std::abs(t.probability - 1.0), kFidelityTolerance));
    }
}

void write_summary(Json &report, const Totals &t, const std::vector<PropertyCheck> &checks) {
    Json list = Json::array();
    bool all = true;
    for (const auto &c : checks) {
        list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        all = all && c.passed;
    }
    report["summary"] = Json{{"branch_count", t.branches},
                             {"transcript_count", t.transcripts},
                             {"probability_total", round15(t.probability)},
                             {"min_fidelity", round15(t.min_fidelity)},
                             {"fidelity_tolerance", kFidelityTolerance},
                             {"checks", list},
                             {"passed", all}};
}

void run_entangling(const ScenarioConfig &cfg, const CorrectionRule &rule, RunResult &res, Totals &t) {
    ProtocolOptions options;
    options.rule = rule;
    const auto records = run_protocol(cfg.messages, cfg.shape, cfg.mode, options);
    for (const auto &rec : records) {
        ++t.branches;
        t.probability += rec.probability;
        for (const auto &tr : rec.receivers) {
            ++t.transcripts;
            t.min_fidelity = std::min(t.min_fidelity, tr.fidelity);
        }
    }
    res.report["branches"] = branches_json(records);
    add_fidelity_checks(cfg, t, res.checks);
}

void run_baseline(const ScenarioConfig &cfg, RunResult &res, Totals &t) {
    const auto run = run_baseline_ghz(cfg.messages.front(), cfg.shape, cfg.mode);
    for (const auto &tr : run.transcripts) {
        ++t.branches;
        ++t.transcripts;
        t.probability += tr.branch_probability;
        t.min_fidelity = std::min(t.min_fidelity, tr.fidelity);
    }
    const auto expected = account(Method::GhzBaseline, cfg.shape);
    res.report["allocated"] = Json{{"aux_qubits", run.aux_qubits_allocated},
                                   {"qubits_per_agent", run.qubits_per_agent},
                                   {"hadamards_per_agent", run.hadamards_per_agent},
                                   {"measurements_per_agent", run.measurements_per_agent},
                                   {"bits_per_agent", run.bits_per_agent},
                                   {"bell_measurements", run.bell_measurements}};
    res.report["branches"] = baseline_branches_json(run);
    add_fidelity_checks(cfg, t, res.checks);
    const bool ledger = run.aux_qubits_allocated == expected.aux_qubits &&
                        run.qubits_per_agent == expected.qubits_per_agent &&
                        run.hadamards_per_agent == expected.hadamards_per_agent &&
                        run.measurements_per_agent == expected.measurements_per_agent &&
                        run.bits_per_agent == expected.bits_per_agent() &&
                        run.bell_measurements == expected.bell_measurements;
    res.checks.push_back(check("resource_ledger", ledger, "allocated counts against closed-form counts"));
}

void run_defection(const ScenarioConfig &cfg, RunResult &res, Totals &t) {
    const auto report = analyze_defection(cfg.messages, cfg.shape, *cfg.defector);
    for (const auto &b : report.branches) {
        ++t.branches;
        t.probability += b.probability;
    }
    t.transcripts = t.branches * cfg.shape.receivers();
    t.min_fidelity = 1.0;
    for (const auto &b : report.branches) {
        for (const auto &q : b.qubits) {
            t.min_fidelity = std::min(t.min_fidelity, q.raw_fidelity);
        }
    }
    res.report["defection"] = defection_json(report);
    res.checks.push_back(below("diagonal", report.max_off_diagonal, kDiagonalTolerance));
    const bool forms = report.forms_match_outcomes && report.max_form_error < kDiagonalTolerance;
    res.checks.push_back(check("diagonal_form", forms, "max form error " + format_number(report.max_form_error)));
    res.checks.push_back(below("outcome_locality", report.max_locality_deviation, kDiagonalTolerance));
    bool below_one = true;
    bool bounded = true;
    for (const auto &r : report.recovery) {
        const auto &q = cfg.messages[r.receiver][r.qubit];
        const bool full = MessageSpec({q}).full_support();
        bounded = bounded && r.best_fidelity <= r.ceiling + kDiagonalTolerance;
        below_one = below_one && (!full || r.best_fidelity < 1.0 - kFidelityTolerance);
    }
    res.checks.push_back(check("recovery_below_one", below_one && bounded,
                               "best unitary recovery under the largest eigenvalue and below 1"));
    res.checks.push_back(below("probability_total", std::abs(t.probability - 1.0), kFidelityTolerance));
}

void run_baseline_defection(const ScenarioConfig &cfg, RunResult &res, Totals &t) {
    const auto report = analyze_baseline_defection(cfg.messages.front(), cfg.shape, *cfg.defector);
    t.branches = report.entries.size();
    t.transcripts = t.branches;
    t.probability = 0.0;
    for (const auto &e : report.entries) {
        t.probability += e.probability;
    }
    // Entries are conditional on each copy separately.
    t.probability /= static_cast<double>(cfg.shape.total_messages());
    res.report["defection"] = baseline_defection_json(report);
    res.checks.push_back(below("diagonal", report.max_off_diagonal, kDiagonalTolerance));
    res.checks.push_back(below("diagonal_form", report.max_form_error, kDiagonalTolerance));
    res.checks.push_back(below("probability_total", std::abs(t.probability - 1.0), kFidelityTolerance));
}

}  // namespace

bool RunResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck &c) { return c.passed; });
}

RunResult execute_run(const ScenarioConfig &cfg, const CorrectionRule &rule) {
    RunResult res;
    res.report = run_header(cfg);
    Totals totals;
    if (cfg.defector) {
        if (cfg.method == Method::EntanglingProtocol) {
            run_defection(cfg, res, totals);
        } else {
            run_baseline_defection(cfg, res, totals);
        }
    } else if (cfg.method == Method::EntanglingProtocol) {
        run_entangling(cfg, rule, res, totals);
    } else {
        run_baseline(cfg, res, totals);
    }
    if (!cfg.warnings.empty()) {
        res.report["warnings"] = cfg.warnings;
    }
    write_summary(res.report, totals, res.checks);
    return res;
}

int cmd_run(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err) {
    for (const auto &w : cfg.warnings) {
        err << "warning: " << w << "\n";
    }
    RunResult res;
    try {
        res = execute_run(cfg);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    const auto text = dump(res.report);
    std::ostream *log = &err;
    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write report to '" << *cfg.out << "'\n";
            return kExitConfig;
        }
        file << text;
        log = &out;
    } else {
        out << text;
    }
    const auto &summary = res.report["summary"];
    *log << "run: " << summary["branch_count"].get<std::size_t>() << " branches, "
         << summary["transcript_count"].get<std::size_t>() << " transcripts\n";
    for (const auto &c : res.checks) {
        *log << (c.passed ? "  PASS " : "  FAIL ") << c.name << " (" << c.detail << ")\n";
    }
    return res.passed() ? kExitSuccess : kExitViolation;
}

MRange parse_m_range(const std::string &text) {
    auto parse = [&text](std::string_view part) {
        std::size_t value = 0;
        const auto *end = part.data() + part.size();
        const auto [ptr, ec] = std::from_chars(part.data(), end, value);
        if (part.empty() || ec != std::errc{} || ptr != end) {
            throw ConfigError("invalid m range '" + text + "' (use a..b or a single number)");
        }
        return value;
    };
    const std::string_view view(text);
    const auto dots = view.find("..");
    MRange range{};
    if (dots == std::string_view::npos) {
        range.first = range.last = parse(view);
    } else {
        range.first = parse(view.substr(0, dots));
        range.last = parse(view.substr(dots + 2));
    }
    if (range.first == 0 || range.last < range.first) {
        throw ConfigError("empty m range '" + text + "'");
    }
    return range;
}

int cmd_compare(const CompareRequest &request, std::ostream &out, std::ostream &err) {
    Json doc;
    std::string text;
    try {
        if (request.agents == 0) {
            throw ConfigError("need at least one agent (n >= 1)");
        }
        if (request.m_range && request.ml) {
            throw ConfigError("give either --m or --ml, not both");
        }
        if (!request.m_range && !request.ml) {
            throw ConfigError("missing message size: give --m or --ml");
        }
        if (request.ml) {
            if (request.ml->empty()) {
                throw ConfigError("--ml needs at least one value");
            }
            if (std::find(request.ml->begin(), request.ml->end(), std::size_t{0}) != request.ml->end()) {
                throw ConfigError("every receiver needs at least one message qubit");
            }
            if (request.ml->size() > 1 && request.receivers && *request.receivers != request.ml->size()) {
                throw ConfigError("--ml lists " + std::to_string(request.ml->size()) + " receivers but --k is " +
                                  std::to_string(*request.receivers));
            }
        }
        const bool uniform = !request.ml || std::all_of(request.ml->begin(), request.ml->end(),
                                                        [&](std::size_t v) { return v == request.ml->front(); });
        if (!uniform) {
            // Receivers of different sizes: one row for the exact shape.
            const NetworkShape shape(*request.ml, request.agents);
            const auto row = compare_methods(shape);
            doc = comparison_json(shape, row);
            std::string label;
            for (auto v : *request.ml) {
                label += (label.empty() ? "" : ",") + std::to_string(v);
            }
            text = crossover_text({row}, {label});
        } else {
            const auto receivers = request.receivers.value_or(request.ml ? request.ml->size() : 1);
            if (receivers == 0) {
                throw ConfigError("need at least one receiver (k >= 1)");
            }
            const auto range = request.ml ? MRange{request.ml->front(), request.ml->front()}
                                          : parse_m_range(*request.m_range);
            const auto table = crossover_table(request.agents, range.first, range.last, receivers);
            doc = crossover_json(table);
            std::vector<std::string> labels;
            for (const auto &row : table.rows) {
                labels.push_back(std::to_string(row.m));
            }
            text = crossover_text(table.rows, labels);
            auto show = [](const std::optional<std::size_t> &v) { return v ? std::to_string(*v) : "none"; };
            text += "first dominant m: " + show(table.first_dominant_m) +
                    ", first aux advantage m: " + show(table.first_aux_advantage_m) + "\n";
        }
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    out << "agents: " << request.agents << "\n" << text;
    if (request.out) {
        std::ofstream file(*request.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write table to '" << *request.out << "'\n";
            return kExitConfig;
        }
        file << dump(doc);
    }
    return kExitSuccess;
}

int cmd_selftest(const SelftestOptions &options, std::ostream &out) {
    const auto checks = run_selftest(options);
    std::vector<std::string> failed;
    for (const auto &c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        if (!c.passed) {
            failed.push_back(c.name);
        }
    }
    if (failed.empty()) {
        out << "selftest: all " << checks.size() << " properties hold\n";
        return kExitSuccess;
    }
    out << "selftest: violated properties:";
    for (const auto &name : failed) {
        out << " " << name;
    }
    out << "\n";
    return kExitViolation;
}

}  // namespace ctele::cli
