// Copyright 2026 The hybridstab Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "hybridstab/code.h"
#include "hybridstab/code_io.h"
#include "json.hpp"
#include "support.h"

namespace hybridstab::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Outcome {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hybridstab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path path = dir_ / name;
        std::ofstream(path, std::ios::binary) << text;
        return path.string();
    }

    fs::path dir_;
};

Json comparable(Json doc) {
    doc.erase("timing");
    return doc;
}

TEST_F(CliTest, ValidateSevenQubitFile) {
    const auto path = write("seven.code", write_code(testing::seven_qubit_code()));
    const auto result = invoke({"validate", path});
    EXPECT_EQ(result.code, kExitOk) << result.err;
    const Json doc = result.json();
    EXPECT_EQ(doc["command"], "validate");
    EXPECT_EQ(doc["code"]["s"], 6);
    EXPECT_EQ(doc["code"]["sectors"], 2);
    EXPECT_EQ(doc["report"]["valid"], true);
    // Key order is part of the contract.
    std::vector<std::string> keys;
    for (const auto& [key, value] : doc.items()) keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "code", "report", "timing"}));
}

TEST_F(CliTest, ValidateRejectsScalarStabilizer) {
    const auto path = write("bad.code", "dim 2\nsites 2\n[stabilizers]\nZI\n-1 II\n[logical]\nIX ; IZ\n");
    const auto result = invoke({"validate", path});
    EXPECT_EQ(result.code, kExitRejected);
    const Json doc = result.json();
    EXPECT_EQ(doc["report"]["valid"], false);
    EXPECT_EQ(doc["report"]["issues"][0]["kind"], "stabilizer_has_scalars");
}

TEST_F(CliTest, ParseErrorsExitWithUsageCode) {
    const auto path = write("broken.code", "dim 2\nsites 2\n[stabilizers]\nZQ\n");
    const auto result = invoke({"validate", path});
    EXPECT_EQ(result.code, kExitUsage);
    EXPECT_NE(result.err.find("line 4"), std::string::npos) << result.err;
    EXPECT_EQ(invoke({"validate", (dir_ / "missing.code").string()}).code, kExitUsage);
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"distance", path, "--threads", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, GenerateThenValidateBaconShor) {
    const auto path = (dir_ / "bs3.code").string();
    ASSERT_EQ(invoke({"generate", "bacon-shor", "--ell", "3", "-o", path}).code, kExitOk);
    const auto result = invoke({"validate", path});
    EXPECT_EQ(result.code, kExitOk);
    EXPECT_EQ(result.json()["code"]["s"], 4);
    EXPECT_EQ(result.json()["code"]["r"], 4);
}

TEST_F(CliTest, GenerateFamiliesRoundTrip) {
    const std::vector<std::vector<std::string>> commands{
        {"generate", "motivating", "--n", "4", "--s", "2", "--r", "1"},
        {"generate", "gkp18"},
        {"generate", "gkp18", "--full-transversal"},
        {"generate", "toric", "--ell", "4"},
        {"generate", "bacon-shor-hybrid", "--ell", "4"},
        {"generate", "bacon-shor", "--ell", "8", "--cx", "hamming743", "--cz", "hamming743"},
    };
    for (const auto& args : commands) {
        const auto generated = invoke(args);
        ASSERT_EQ(generated.code, kExitOk) << generated.err;
        EXPECT_EQ(write_code(parse_code(generated.out)), generated.out);
        const auto path = write("generated.code", generated.out);
        EXPECT_EQ(invoke({"validate", path}).code, kExitOk) << args[1];
    }
    EXPECT_EQ(parse_code(invoke(commands[5]).out).sector_count(), 256u);
    EXPECT_EQ(write_code(parse_code(invoke(commands[0]).out)), write_code(build_motivating(4, 2, 1)));
    EXPECT_EQ(invoke({"generate", "klein-bottle"}).code, kExitUsage);
    EXPECT_EQ(invoke({"generate", "bacon-shor", "--ell", "1"}).code, kExitUsage);
}

TEST_F(CliTest, GenerateWithClassicalMatrixFile) {
    const auto matrix = write("rep.txt", "# repetition\n1 1 1\n");
    const auto by_file = invoke({"generate", "bacon-shor", "--ell", "4", "--cx", matrix, "--cz", matrix});
    const auto by_name = invoke({"generate", "bacon-shor-hybrid", "--ell", "4"});
    ASSERT_EQ(by_file.code, kExitOk) << by_file.err;
    EXPECT_EQ(by_file.out, by_name.out);
}

TEST_F(CliTest, CheckSevenQubitVerdicts) {
    const auto code = write("seven.code", write_code(testing::seven_qubit_code()));
    const auto good = write("good.txt", "IIIIIII\nXIIIIII\n");
    const auto bad = write("bad.txt", "IIIIIII\nIIIIXYY\n");

    const auto accepted = invoke({"check", code, good, "--oracle"});
    EXPECT_EQ(accepted.code, kExitOk) << accepted.err;
    EXPECT_EQ(accepted.json()["report"]["verdict"], "correctable");
    EXPECT_TRUE(accepted.json()["report"]["witness"].is_null());
    EXPECT_EQ(accepted.json()["report"]["oracle"]["agrees"], true);

    const auto rejected = invoke({"check", code, bad, "--oracle"});
    EXPECT_EQ(rejected.code, kExitRejected);
    const Json report = rejected.json()["report"];
    EXPECT_EQ(report["verdict"], "not_correctable");
    EXPECT_EQ(report["witness"]["tag"], "cross_coset(1,2)");
    EXPECT_EQ(report["witness"]["set"], "cross_coset");
    EXPECT_EQ(report["witness"]["sectors"], Json::array({1, 2}));
    EXPECT_EQ(report["witness"]["k"], 1);
    EXPECT_EQ(report["witness"]["l"], 2);
    EXPECT_EQ(report["per_sector"], Json::array({true, true}));
    EXPECT_EQ(report["oracle"]["verdict"], "not_correctable");
}

TEST_F(CliTest, CheckGkp18OddClockPowers) {
    const auto code = write("gkp.code", invoke({"generate", "gkp18"}).out);
    std::string errors;
    for (int b = 0; b <= 8; ++b) errors += "w^0/2 x0z" + std::to_string(2 * b + 1) + "\n";
    const auto result = invoke({"check", code, write("errors.txt", errors), "--oracle"});
    EXPECT_EQ(result.code, kExitOk) << result.err;
    EXPECT_EQ(result.json()["report"]["error_count"], 9);
    EXPECT_EQ(result.json()["report"]["oracle"]["agrees"], true);
}

TEST_F(CliTest, CheckReportsOracleCap) {
    const auto code = write("bs8.code", invoke({"generate", "bacon-shor-hybrid", "--ell", "8"}).out);
    std::string identity(64, 'I');
    const auto errors = write("errors.txt", identity + "\n");
    const auto result = invoke({"check", code, errors, "--oracle"});
    EXPECT_EQ(result.code, kExitOracle);
    EXPECT_EQ(result.json()["report"]["oracle"]["status"], "cap_exceeded");
    EXPECT_EQ(invoke({"check", code, errors}).code, kExitOk);
}

TEST_F(CliTest, CheckRejectsInvalidCodeAndMismatchedErrors) {
    const auto invalid = write("invalid.code", "dim 2\nsites 2\n[stabilizers]\nZI\n[logical]\nIX ; IZ\n[transversal]\nII\nZI\n");
    const auto errors = write("errors.txt", "II\n");
    const auto result = invoke({"check", invalid, errors});
    EXPECT_EQ(result.code, kExitRejected);
    EXPECT_EQ(result.json()["report"]["validation"]["valid"], false);
    const auto code = write("seven.code", write_code(testing::seven_qubit_code()));
    EXPECT_EQ(invoke({"check", code, errors}).code, kExitUsage);
    EXPECT_EQ(invoke({"check", code, write("empty.txt", "# nothing\n")}).code, kExitUsage);
}

TEST_F(CliTest, DistanceReportsAndIsDeterministic) {
    const auto code = write("bs5.code", invoke({"generate", "bacon-shor-hybrid", "--ell", "5"}).out);
    const auto first = invoke({"distance", code, "--threads", "1"});
    const auto second = invoke({"distance", code, "--threads", "3"});
    ASSERT_EQ(first.code, kExitOk) << first.err;
    const Json report = first.json()["report"];
    EXPECT_EQ(report["exact_distance"], 2);
    EXPECT_EQ(report["notation"], "[[25, 1:2, 2]]");
    EXPECT_EQ(report["anticommute_degree"]["m_x"], 2);
    EXPECT_EQ(first.json()["code"]["classical_dits"], 2);
    Json a = comparable(first.json()), b = comparable(second.json());
    EXPECT_EQ(a.dump(), b.dump());
}

TEST_F(CliTest, DistanceRespectsCutoff) {
    const auto code = write("bs3.code", invoke({"generate", "bacon-shor", "--ell", "3"}).out);
    const auto result = invoke({"distance", code, "--max-weight", "2"});
    ASSERT_EQ(result.code, kExitOk);
    const Json report = result.json()["report"];
    EXPECT_TRUE(report["exact_distance"].is_null());
    EXPECT_EQ(report["lower_bound"], 3);
    EXPECT_EQ(report["search_cutoff"], 2);
    EXPECT_EQ(invoke({"distance", code, "--max-weight", "0"}).code, kExitUsage);
}

TEST_F(CliTest, PipelineIsReproducible) {
    auto pipeline = [&] {
        const auto code = write("m.code", invoke({"generate", "motivating", "--n", "4", "--s", "2", "--r", "1"}).out);
        const auto errors = write("e.txt", "IIII\nXIII\nIIIZ\n");
        return comparable(invoke({"validate", code}).json()).dump() + comparable(invoke({"check", code, errors}).json()).dump();
    };
    EXPECT_EQ(pipeline(), pipeline());
}

}  // namespace
}  // namespace hybridstab::cli
