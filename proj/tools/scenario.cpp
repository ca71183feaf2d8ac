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


#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

namespace ctele::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kKnownKeys{"m",    "ml",     "n",    "k",   "method",   "message",
                                          "mode", "seed",   "defector", "out"};

template <typename T>
T get_as(const json &node, const std::string &what) {
    try {
        return node.get<T>();
    } catch (const json::exception &) {
        throw ConfigError("config field '" + what + "' has the wrong type");
    }
}

std::size_t get_count(const json &node, const std::string &what) {
    if (!node.is_number_unsigned() && !(node.is_number_integer() && node.get<long long>() >= 0)) {
        throw ConfigError("config field '" + what + "' must be a nonnegative integer");
    }
    return node.get<std::size_t>();
}

Complex parse_complex(const json &node, const std::string &what) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
        throw ConfigError(what + " must be a [re, im] pair of numbers");
    }
    return {node[0].get<double>(), node[1].get<double>()};
}

std::vector<QubitMessage> parse_amplitudes(const json &node) {
    if (!node.is_array() || node.empty()) {
        throw ConfigError("message.amplitudes must be a nonempty list");
    }
    std::vector<QubitMessage> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const auto &entry = node[i];
        const std::string where = "message.amplitudes[" + std::to_string(i) + "]";
        if (!entry.is_array() || entry.size() != 2) {
            throw ConfigError(where + " must be [[re, im], [re, im]]");
        }
        out.push_back({parse_complex(entry[0], where + " alpha"), parse_complex(entry[1], where + " beta")});
    }
    return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (out > UINT64_MAX / base) {
            return UINT64_MAX;
        }
        out *= base;
    }
    return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) {
        return UINT64_MAX;
    }
    return a * b;
}

QubitMessage spread_qubit(std::size_t index) {
    // Golden-ratio stepping keeps the weights distinct; values close to an
    // even split are pushed away so the two diagonal forms stay apart.
    double p0 = 0.15 + 0.7 * std::fmod(0.381966011250105 * static_cast<double>(index + 1), 1.0);
    if (std::abs(p0 - 0.5) < 0.05) {
        p0 += 0.1;
    }
    const double phase = 0.7 + 1.3 * static_cast<double>(index);
    return {Complex{std::sqrt(p0), 0.0}, std::polar(std::sqrt(1.0 - p0), phase)};
}

}  // namespace

ScenarioInput parse_scenario_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            throw ConfigError("unknown config field '" + key + "'");
        }
    }
    ScenarioInput in;
    if (doc.contains("m")) {
        in.m = get_count(doc["m"], "m");
    }
    if (doc.contains("ml")) {
        const auto &ml = doc["ml"];
        if (!ml.is_array()) {
            throw ConfigError("config field 'ml' must be a list of integers");
        }
        std::vector<std::size_t> sizes;
        for (const auto &v : ml) {
            sizes.push_back(get_count(v, "ml"));
        }
        in.ml = std::move(sizes);
    }
    if (doc.contains("n")) {
        in.n = get_count(doc["n"], "n");
    }
    if (doc.contains("k")) {
        in.k = get_count(doc["k"], "k");
    }
    if (doc.contains("method")) {
        in.method = get_as<std::string>(doc["method"], "method");
    }
    if (doc.contains("message")) {
        const auto &msg = doc["message"];
        if (!msg.is_object()) {
            throw ConfigError("config field 'message' must be an object");
        }
        std::size_t sources = 0;
        if (msg.contains("preset")) {
            in.preset = get_as<std::string>(msg["preset"], "message.preset");
            ++sources;
        }
        if (msg.contains("random_seed")) {
            in.message_seed = get_as<std::uint64_t>(msg["random_seed"], "message.random_seed");
            ++sources;
        }
        if (msg.contains("amplitudes")) {
            in.amplitudes = parse_amplitudes(msg["amplitudes"]);
            ++sources;
        }
        if (sources != 1 || msg.size() != 1) {
            throw ConfigError("config field 'message' needs exactly one of preset, random_seed, amplitudes");
        }
    }
    if (doc.contains("mode")) {
        const auto mode = get_as<std::string>(doc["mode"], "mode");
        if (mode == "enumerate") {
            in.enumerate = true;
        } else if (mode == "sampled") {
            in.enumerate = false;
        } else {
            throw ConfigError("config field 'mode' must be \"enumerate\" or \"sampled\"");
        }
    }
    if (doc.contains("seed")) {
        in.seed = get_as<std::uint64_t>(doc["seed"], "seed");
    }
    if (doc.contains("defector")) {
        in.defector = get_count(doc["defector"], "defector");
    }
    if (doc.contains("out")) {
        in.out = get_as<std::string>(doc["out"], "out");
    }
    return in;
}

ScenarioInput read_scenario_file(const std::string &path) {
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << file.rdbuf();
    return parse_scenario_text(text.str());
}

ScenarioInput merge(ScenarioInput file, const ScenarioInput &flags) {
    if (flags.m) {
        file.m = flags.m;
        file.ml.reset();
    }
    if (flags.ml) {
        file.ml = flags.ml;
        file.m.reset();
    }
    if (flags.preset || flags.message_seed || flags.amplitudes) {
        file.preset = flags.preset;
        file.message_seed = flags.message_seed;
        file.amplitudes = flags.amplitudes;
    }
    auto take = [](auto &dst, const auto &src) {
        if (src) {
            dst = src;
        }
    };
    take(file.n, flags.n);
    take(file.k, flags.k);
    take(file.method, flags.method);
    take(file.enumerate, flags.enumerate);
    take(file.seed, flags.seed);
    take(file.defector, flags.defector);
    take(file.out, flags.out);
    return file;
}

NetworkShape resolve_shape(const ScenarioInput &input) {
    const std::size_t k = input.k.value_or(input.ml && input.ml->size() > 1 ? input.ml->size() : 1);
    if (k == 0) {
        throw ConfigError("need at least one receiver (k >= 1)");
    }
    std::vector<std::size_t> sizes;
    if (input.ml) {
        if (input.ml->size() == 1) {
            sizes.assign(k, input.ml->front());
        } else if (input.ml->size() == k) {
            sizes = *input.ml;
        } else {
            throw ConfigError("ml lists " + std::to_string(input.ml->size()) + " receivers but k is " +
                              std::to_string(k));
        }
    } else if (input.m) {
        sizes.assign(k, *input.m);
    } else {
        throw ConfigError("missing message size: give m or ml");
    }
    if (!input.n) {
        throw ConfigError("missing agent count: give n");
    }
    for (auto size : sizes) {
        if (size == 0) {
            throw ConfigError("every receiver needs at least one message qubit");
        }
    }
    if (*input.n == 0) {
        throw ConfigError("need at least one agent (n >= 1)");
    }
    return NetworkShape(std::move(sizes), *input.n);
}

std::size_t simulated_qubits(Method method, const NetworkShape &shape) {
    if (method == Method::GhzBaseline) {
        return shape.agents() + 3;
    }
    return 3 * shape.total_messages() + shape.agents() + 1;
}

std::uint64_t enumerated_branches(Method method, const NetworkShape &shape, bool with_defector) {
    const std::uint64_t measured_agents = shape.agents() - (with_defector ? 1 : 0);
    if (method == Method::GhzBaseline) {
        if (with_defector) {
            // Copies are analyzed one at a time.
            return saturating_mul(shape.total_messages(), saturating_pow(2, 2 + measured_agents));
        }
        return saturating_pow(saturating_pow(2, 2 + shape.agents()), shape.total_messages());
    }
    const std::uint64_t bits = measured_agents + 1;
    return saturating_mul(saturating_pow(4, shape.total_messages()), saturating_pow(2, bits));
}

std::vector<MessageSpec> preset_messages(const std::string &name, const NetworkShape &shape) {
    std::vector<MessageSpec> out;
    std::size_t index = 0;
    for (std::size_t l = 0; l < shape.receivers(); ++l) {
        std::vector<QubitMessage> qubits;
        for (std::size_t i = 0; i < shape.messages_for(l); ++i, ++index) {
            if (name == "spread") {
                qubits.push_back(spread_qubit(index));
            } else if (name == "zero") {
                qubits.push_back({1.0, 0.0});
            } else if (name == "one") {
                qubits.push_back({0.0, 1.0});
            } else if (name == "plus") {
                qubits.push_back({std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2});
            } else {
                throw ConfigError("unknown message preset '" + name + "' (spread, zero, one, plus)");
            }
        }
        out.push_back(MessageSpec::normalizing(std::move(qubits)).spec);
    }
    return out;
}

ScenarioConfig resolve(const ScenarioInput &input) {
    ScenarioConfig cfg;
    try {
        cfg.shape = resolve_shape(input);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    const auto &shape = cfg.shape;

    const std::string method = input.method.value_or("entangling");
    if (method == "entangling") {
        cfg.method = Method::EntanglingProtocol;
    } else if (method == "baseline") {
        cfg.method = Method::GhzBaseline;
    } else {
        throw ConfigError("method must be \"entangling\" or \"baseline\"");
    }

    const auto qubits = simulated_qubits(cfg.method, shape);
    if (qubits > kMaxSimulatedQubits) {
        throw ConfigError("shape exceeds simulator capacity: " + std::to_string(qubits) + " qubits, limit " +
                          std::to_string(kMaxSimulatedQubits));
    }
    if (cfg.method == Method::GhzBaseline && shape.receivers() != 1) {
        throw ConfigError("the baseline method supports a single receiver only");
    }

    if (input.defector) {
        if (*input.defector < 1 || *input.defector > shape.agents()) {
            throw ConfigError("defector must name an agent between 1 and " + std::to_string(shape.agents()));
        }
        cfg.defector = *input.defector - 1;
    }

    const bool enumerate = input.enumerate.value_or(false) || cfg.defector.has_value();
    if (enumerate) {
        if (input.defector && input.enumerate.has_value() && !*input.enumerate) {
            cfg.warnings.push_back("defection analysis always enumerates; sampled mode ignored");
        }
        const auto branches = enumerated_branches(cfg.method, shape, cfg.defector.has_value());
        if (branches > kMaxEnumeratedBranches) {
            throw ConfigError("enumeration would visit " + std::to_string(branches) + " branches, limit " +
                              std::to_string(kMaxEnumeratedBranches) + "; use sampled mode with --seed");
        }
        cfg.mode = Enumerate{};
    } else {
        if (!input.seed) {
            throw ConfigError("sampled mode requires a seed: pass --seed or --enumerate");
        }
        cfg.mode = Sampled{*input.seed};
    }

    if (input.amplitudes) {
        cfg.source = MessageSource::Explicit;
        if (input.amplitudes->size() != shape.total_messages()) {
            throw ConfigError("message.amplitudes lists " + std::to_string(input.amplitudes->size()) +
                              " qubits but the shape has " + std::to_string(shape.total_messages()));
        }
        std::size_t offset = 0;
        for (std::size_t l = 0; l < shape.receivers(); ++l) {
            std::vector<QubitMessage> qubits(input.amplitudes->begin() + static_cast<std::ptrdiff_t>(offset),
                                             input.amplitudes->begin() +
                                                 static_cast<std::ptrdiff_t>(offset + shape.messages_for(l)));
            offset += shape.messages_for(l);
            try {
                auto normalized = MessageSpec::normalizing(std::move(qubits));
                cfg.max_normalization = std::max(cfg.max_normalization, normalized.max_correction);
                cfg.messages.push_back(std::move(normalized.spec));
            } catch (const std::invalid_argument &e) {
                throw ConfigError(std::string("message.amplitudes: ") + e.what());
            }
        }
        if (cfg.max_normalization > kNormalizationWarning) {
            std::ostringstream msg;
            msg << "message amplitudes were rescaled (largest norm correction " << cfg.max_normalization << ")";
            cfg.warnings.push_back(msg.str());
        }
    } else if (input.message_seed) {
        cfg.source = MessageSource::Random;
        cfg.message_seed = *input.message_seed;
        std::mt19937_64 rng(cfg.message_seed);
        for (std::size_t l = 0; l < shape.receivers(); ++l) {
            cfg.messages.push_back(MessageSpec::random(shape.messages_for(l), rng));
        }
    } else {
        cfg.source = MessageSource::Preset;
        cfg.preset = input.preset.value_or("spread");
        cfg.messages = preset_messages(cfg.preset, shape);
    }
    cfg.out = input.out;
    return cfg;
}

}  // namespace ctele::cli
