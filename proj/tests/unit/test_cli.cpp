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


#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"
#include "scenario.hpp"

namespace ctele::cli {
namespace {

ScenarioInput basic(std::size_t m, std::size_t n) {
    ScenarioInput in;
    in.m = m;
    in.n = n;
    in.enumerate = true;
    return in;
}

TEST(ScenarioParse, ReadsEveryField) {
    const auto in = parse_scenario_text(R"({
        "ml": [1, 2], "n": 3, "k": 2, "method": "baseline",
        "message": {"amplitudes": [[[1, 0], [0, 0]], [[0, 0], [0, 1]], [[0.6, 0], [0, 0.8]]]},
        "mode": "sampled", "seed": 9, "defector": 2, "out": "r.json"})");
    ASSERT_TRUE(in.ml.has_value());
    EXPECT_EQ(*in.ml, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(in.n, 3u);
    EXPECT_EQ(in.k, 2u);
    EXPECT_EQ(in.method, "baseline");
    ASSERT_TRUE(in.amplitudes.has_value());
    EXPECT_EQ(in.amplitudes->size(), 3u);
    EXPECT_DOUBLE_EQ(in.amplitudes->at(2).beta.imag(), 0.8);
    EXPECT_EQ(in.enumerate, false);
    EXPECT_EQ(in.seed, 9u);
    EXPECT_EQ(in.defector, 2u);
    EXPECT_EQ(in.out, "r.json");
}

TEST(ScenarioParse, RejectsMalformedDocuments) {
    for (const char *text : {"[1]", "{", R"({"bogus": 1})", R"({"m": -1})", R"({"m": "two"})",
                             R"({"message": {"preset": "zero", "random_seed": 3}})",
                             R"({"message": {"amplitudes": [[[1, 0]]]}})", R"({"mode": "fast"})"}) {
        EXPECT_THROW(parse_scenario_text(text), ConfigError) << text;
    }
}

TEST(ScenarioMerge, FlagsOverrideFile) {
    auto file = parse_scenario_text(R"({"ml": [2, 2], "n": 1, "seed": 4, "message": {"preset": "one"}})");
    ScenarioInput flags;
    flags.m = 3;
    flags.message_seed = 11;
    flags.n = 2;
    const auto merged = merge(file, flags);
    EXPECT_FALSE(merged.ml.has_value());
    EXPECT_EQ(merged.m, 3u);
    EXPECT_EQ(merged.n, 2u);
    EXPECT_EQ(merged.seed, 4u);
    EXPECT_FALSE(merged.preset.has_value());
    EXPECT_EQ(merged.message_seed, 11u);
}

TEST(ScenarioResolve, ShapeFromMlAndK) {
    ScenarioInput in;
    in.ml = std::vector<std::size_t>{2};
    in.k = 3;
    in.n = 1;
    in.seed = 1;
    const auto cfg = resolve(in);
    EXPECT_EQ(cfg.shape.receivers(), 3u);
    EXPECT_EQ(cfg.shape.total_messages(), 6u);
    EXPECT_EQ(cfg.messages.size(), 3u);

    in.ml = std::vector<std::size_t>{1, 2};
    EXPECT_THROW(resolve(in), ConfigError);
    in.k.reset();
    EXPECT_EQ(resolve(in).shape.receivers(), 2u);
}

TEST(ScenarioResolve, CapacityGuard) {
    auto in = basic(1, 30);
    try {
        resolve(in);
        FAIL() << "expected refusal";
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("shape exceeds simulator capacity"), std::string::npos);
    }
    // 3 * 7 + 4 + 1 = 26 qubits is the largest accepted entangling shape.
    in = basic(7, 4);
    in.enumerate = false;
    in.seed = 1;
    EXPECT_EQ(simulated_qubits(Method::EntanglingProtocol, resolve_shape(in)), 26u);
    EXPECT_NO_THROW(resolve(in));
    in.n = 5;
    EXPECT_THROW(resolve(in), ConfigError);
}

TEST(ScenarioResolve, BranchBudget) {
    EXPECT_EQ(enumerated_branches(Method::EntanglingProtocol, NetworkShape::single_receiver(2, 2), false), 128u);
    EXPECT_EQ(enumerated_branches(Method::EntanglingProtocol, NetworkShape::single_receiver(2, 2), true), 64u);
    EXPECT_EQ(enumerated_branches(Method::GhzBaseline, NetworkShape::single_receiver(2, 1), false), 64u);
    EXPECT_THROW(resolve(basic(7, 4)), ConfigError);
}

TEST(ScenarioResolve, SampledNeedsSeed) {
    auto in = basic(1, 1);
    in.enumerate = false;
    EXPECT_THROW(resolve(in), ConfigError);
    in.defector = 1;
    EXPECT_TRUE(resolve(in).enumerate());
}

TEST(ScenarioResolve, DefectorIsOneBased) {
    auto in = basic(1, 2);
    in.defector = 2;
    EXPECT_EQ(resolve(in).defector, 1u);
    in.defector = 0;
    EXPECT_THROW(resolve(in), ConfigError);
    in.defector = 3;
    EXPECT_THROW(resolve(in), ConfigError);
}

TEST(ScenarioResolve, AmplitudesNormalizedWithWarning) {
    auto in = basic(2, 1);
    in.amplitudes = std::vector<QubitMessage>{{{3.0, 0.0}, {0.0, 4.0}}, {{1.0, 0.0}, {0.0, 0.0}}};
    const auto cfg = resolve(in);
    EXPECT_NEAR(std::abs(cfg.messages[0][0].alpha), 0.6, 1e-15);
    EXPECT_NEAR(cfg.max_normalization, 4.0, 1e-15);
    EXPECT_EQ(cfg.warnings.size(), 1u);

    in.amplitudes = std::vector<QubitMessage>{{{0.6, 0.0}, {0.8, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}};
    EXPECT_TRUE(resolve(in).warnings.empty());
    in.amplitudes->pop_back();
    EXPECT_THROW(resolve(in), ConfigError);
    in.amplitudes = std::vector<QubitMessage>{{{0.0, 0.0}, {0.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}};
    EXPECT_THROW(resolve(in), ConfigError);
}

TEST(ScenarioResolve, SpreadPresetIsUnbalancedWithFullSupport) {
    const auto specs = preset_messages("spread", NetworkShape({3, 3}, 1));
    for (const auto &spec : specs) {
        EXPECT_TRUE(spec.full_support());
        for (const auto &q : spec.qubits()) {
            EXPECT_GT(std::abs(std::norm(q.alpha) - std::norm(q.beta)), 1e-3);
        }
    }
    EXPECT_THROW(preset_messages("bogus", NetworkShape({1}, 1)), ConfigError);
}

TEST(ScenarioResolve, BaselineSingleReceiverOnly) {
    auto in = basic(1, 1);
    in.method = "baseline";
    in.k = 2;
    EXPECT_THROW(resolve(in), ConfigError);
    in.method = "other";
    in.k = 1;
    EXPECT_THROW(resolve(in), ConfigError);
}

TEST(Report, RoundsToFifteenDigits) {
    EXPECT_EQ(round15(-0.0), 0.0);
    EXPECT_FALSE(std::signbit(round15(-0.0)));
    EXPECT_EQ(round15(0.1234567890123456789), 0.123456789012346);
    EXPECT_EQ(round15(1.0 - 1e-17), 1.0);
}

TEST(MRangeParse, AcceptsRangesAndSingles) {
    EXPECT_EQ(parse_m_range("1..5").last, 5u);
    EXPECT_EQ(parse_m_range("4").first, 4u);
    for (const char *bad : {"", "0..3", "3..2", "a..b", "1..", "1...3", "2x"}) {
        EXPECT_THROW(parse_m_range(bad), ConfigError) << bad;
    }
}

TEST(RunCommand, ReportStructureAndExitCode) {
    const auto cfg = resolve(basic(2, 2));
    const auto res = execute_run(cfg);
    EXPECT_TRUE(res.passed());
    EXPECT_EQ(res.report["schema_version"], kSchemaVersion);
    EXPECT_EQ(res.report["branches"].size(), 128u);
    EXPECT_EQ(res.report["summary"]["transcript_count"], 128u);
    const auto &keys = res.report["branches"];
    for (std::size_t i = 1; i < keys.size(); ++i) {
        EXPECT_LT(keys[i - 1]["key"].get<std::vector<int>>(), keys[i]["key"].get<std::vector<int>>());
    }
    std::ostringstream out, err;
    EXPECT_EQ(cmd_run(cfg, out, err), kExitSuccess);
    EXPECT_EQ(nlohmann::json::parse(out.str())["summary"]["passed"], true);
}

TEST(RunCommand, CorruptRuleIsAViolation) {
    auto rule = CorrectionRule::standard();
    rule[BellOutcome::PhiPlus] = {PauliOp::Z, PauliOp::I};
    EXPECT_FALSE(execute_run(resolve(basic(1, 1)), rule).passed());
}

TEST(RunCommand, BaselineAndDefectionReports) {
    auto in = basic(2, 2);
    in.method = "baseline";
    auto res = execute_run(resolve(in));
    EXPECT_TRUE(res.passed());
    EXPECT_EQ(res.report["branches"].size(), 256u);
    EXPECT_EQ(res.report["allocated"]["aux_qubits"], 8u);

    in.defector = 1;
    res = execute_run(resolve(in));
    EXPECT_TRUE(res.passed());
    EXPECT_TRUE(res.report.contains("defection"));

    in.method.reset();
    res = execute_run(resolve(in));
    EXPECT_TRUE(res.passed());
    EXPECT_EQ(res.report["defection"]["branches"].size(), 64u);
}

TEST(CompareCommand, ReferenceRowsAndErrors) {
    CompareRequest req;
    req.m_range = "1..5";
    std::ostringstream out, err;
    ASSERT_EQ(cmd_compare(req, out, err), kExitSuccess);
    EXPECT_NE(out.str().find("4 vs 3"), std::string::npos);

    req.m_range.reset();
    req.ml = std::vector<std::size_t>{1, 3};
    req.agents = 2;
    out.str("");
    ASSERT_EQ(cmd_compare(req, out, err), kExitSuccess);
    // 2*4 + 2 + 1 vs 4 * (2 + 2).
    EXPECT_NE(out.str().find("11 vs 16"), std::string::npos);

    req.ml.reset();
    req.m_range = "5..1";
    EXPECT_EQ(cmd_compare(req, out, err), kExitConfig);
    req.m_range.reset();
    EXPECT_EQ(cmd_compare(req, out, err), kExitConfig);
}

TEST(Selftest, PassesAndCatchesCorruptTable) {
    for (const auto &c : run_selftest({})) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
    std::ostringstream out;
    EXPECT_EQ(cmd_selftest({.corrupt_table = true}, out), kExitViolation);
    EXPECT_NE(out.str().find("FAIL reconstruction"), std::string::npos);
}

}  // namespace
}  // namespace ctele::cli
