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


#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace ctele::cli;

struct RunFlags {
    std::size_t m = 0;
    std::vector<std::size_t> ml;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    bool enumerate = false;
    std::size_t defector = 0;
    std::string spec;
    std::string out;
    std::string method;
    std::string preset;
    std::uint64_t message_seed = 0;
};

ScenarioInput flags_input(const CLI::App &cmd, const RunFlags &f) {
    ScenarioInput in;
    auto given = [&cmd](const char *name) { return cmd.count(name) > 0; };
    if (given("--m")) in.m = f.m;
    if (given("--ml")) in.ml = f.ml;
    if (given("--n")) in.n = f.n;
    if (given("--k")) in.k = f.k;
    if (given("--seed")) in.seed = f.seed;
    if (given("--enumerate")) in.enumerate = true;
    if (given("--defector")) in.defector = f.defector;
    if (given("--out")) in.out = f.out;
    if (given("--method")) in.method = f.method;
    if (given("--preset")) in.preset = f.preset;
    if (given("--message-seed")) in.message_seed = f.message_seed;
    return in;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Controlled multi-qubit teleportation simulator"};
    app.require_subcommand(1);

    RunFlags run;
    auto *run_cmd = app.add_subcommand("run", "Simulate one scenario and write a JSON report");
    run_cmd->add_option("--m", run.m, "Message qubits per receiver");
    run_cmd->add_option("--ml", run.ml, "Message qubits of each receiver")->delimiter(',');
    run_cmd->add_option("--n", run.n, "Number of agents");
    run_cmd->add_option("--k", run.k, "Number of receivers");
    run_cmd->add_option("--seed", run.seed, "Seed for sampled mode");
    run_cmd->add_flag("--enumerate", run.enumerate, "Enumerate every measurement branch");
    run_cmd->add_option("--defector", run.defector, "Agent (1-based) that withholds its measurement");
    run_cmd->add_option("--spec", run.spec, "JSON scenario file; flags override its fields");
    run_cmd->add_option("--out", run.out, "Report path (default: standard output)");
    run_cmd->add_option("--method", run.method, "entangling or baseline");
    run_cmd->add_option("--preset", run.preset, "Message preset: spread, zero, one, plus");
    run_cmd->add_option("--message-seed", run.message_seed, "Draw random message qubits from this seed");

    std::string m_range;
    std::vector<std::size_t> compare_ml;
    std::size_t compare_n = 1;
    std::size_t compare_k = 0;
    std::string compare_out;
    auto *compare_cmd = app.add_subcommand("compare", "Tabulate resource costs of both methods");
    compare_cmd->add_option("--m", m_range, "Message range a..b or a single value");
    compare_cmd->add_option("--ml", compare_ml, "Message qubits of each receiver")->delimiter(',');
    compare_cmd->add_option("--n", compare_n, "Number of agents");
    compare_cmd->add_option("--k", compare_k, "Number of receivers");
    compare_cmd->add_option("--out", compare_out, "JSON table path");

    SelftestOptions selftest;
    auto *selftest_cmd = app.add_subcommand("selftest", "Check the invariant suite");
    selftest_cmd->add_flag("--corrupt-table", selftest.corrupt_table)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    if (*run_cmd) {
        try {
            ScenarioInput file;
            if (!run.spec.empty()) {
                file = read_scenario_file(run.spec);
            }
            const auto cfg = resolve(merge(std::move(file), flags_input(*run_cmd, run)));
            return cmd_run(cfg, std::cout, std::cerr);
        } catch (const ConfigError &e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitConfig;
        }
    }
    if (*compare_cmd) {
        CompareRequest request;
        if (compare_cmd->count("--m")) request.m_range = m_range;
        if (compare_cmd->count("--ml")) request.ml = compare_ml;
        request.agents = compare_n;
        if (compare_cmd->count("--k")) request.receivers = compare_k;
        if (compare_cmd->count("--out")) request.out = compare_out;
        return cmd_compare(request, std::cout, std::cerr);
    }
    return cmd_selftest(selftest, std::cout);
}
