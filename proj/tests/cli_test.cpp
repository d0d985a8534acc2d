/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <olrwa/cli.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using olrwa::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> rows_of(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}// namespace

TEST(Cli, SyntheticFiveTrials) {
    const Outcome o = invoke({"synthetic", "--dim", "2", "--n", "200", "--mode", "consistent", "--trials", "5", "--seed", "7"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out.rfind("# olrwa-bench synthetic ", 0), 0u);
    const auto rows = rows_of(o.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"trial", "batch_r2", "online_r2", "gap", "runtime_ms_batch", "runtime_ms_online"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 6u);
        EXPECT_EQ(rows[i][0], std::to_string(i));
        const double batch = std::stod(rows[i][1]);
        const double online = std::stod(rows[i][2]);
        EXPECT_LE(batch, 1.0);
        EXPECT_LE(online, 1.0);
        // Printed values are rounded to 6 decimals.
        EXPECT_NEAR(std::stod(rows[i][3]), batch - online, 1.5e-6);
    }
    EXPECT_NE(o.err.find("median"), std::string::npos);
}

TEST(Cli, ShiftingAndThreeDimensional) {
    for (const char* mode : {"consistent", "shifting"}) {
        const Outcome o = invoke({"synthetic", "--dim", "3", "--mode", mode, "--trials", "3", "--no-timestamp"});
        ASSERT_EQ(o.code, 0) << o.err;
        EXPECT_EQ(rows_of(o.out).size(), 4u);
    }
}

TEST(Cli, ByteIdenticalReruns) {
    const std::vector<std::string> args{"synthetic", "--dim", "3", "--trials", "4", "--seed", "11", "--no-timestamp", "--no-timing"};
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("trial,", 0), 0u);
    const Outcome c = invoke({"synthetic", "--dim", "3", "--trials", "4", "--seed", "12", "--no-timestamp", "--no-timing"});
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, TooFewPointsIsUsageError) {
    const Outcome o = invoke({"synthetic", "--n", "1"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("InsufficientData"), std::string::npos) << o.err;
}

TEST(Cli, BadFlagsAreUsageErrors) {
    EXPECT_EQ(invoke({"synthetic", "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"synthetic", "--dim", "4"}).code, 2);
    EXPECT_EQ(invoke({"synthetic", "--policy", "decay"}).code, 2);
    EXPECT_EQ(invoke({"synthetic", "--trials", "0"}).code, 2);
    EXPECT_EQ(invoke({"csv", "--input", "x.csv"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST(Cli, AdversarialReportsHalves) {
    const Outcome o = invoke({"adversarial", "--policy", "confidence", "--trials", "3", "--no-timestamp"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto rows = rows_of(o.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].back(), "r2_second_half");
    EXPECT_EQ(rows[1].size(), 8u);
}

TEST(Cli, OutFlagWritesFile) {
    const std::string path = temp_path("olrwa_cli_out.csv");
    const Outcome o = invoke({"synthetic", "--trials", "2", "--out", path, "--no-timestamp"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(rows_of(text.str()).size(), 3u);
    std::filesystem::remove(path);
}

TEST(Cli, CsvMissingFile) {
    const Outcome o = invoke({"csv", "--input", "/nonexistent/olrwa.csv", "--target", "y", "--features", "x"});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.err.find("FileNotFound"), std::string::npos) << o.err;
}

TEST(Cli, CsvRunAndMissingColumn) {
    const std::string path = temp_path("olrwa_cli_in.csv");
    {
        std::ofstream f(path);
        f << "x1;x2;y\n";
        for (int i = 0; i < 120; ++i) {
            f << i % 11 << ';' << (i * 7) % 13 << ';' << 2 * (i % 11) - (i * 7) % 13 + (i % 3) << '\n';
        }
    }
    const Outcome ok = invoke({"csv", "--input", path, "--target", "y", "--features", "x1,x2", "--delimiter", ";", "--no-timestamp"});
    ASSERT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(rows_of(ok.out).size(), 6u);

    const Outcome bad = invoke({"csv", "--input", path, "--target", "y", "--features", "x1,x9", "--delimiter", ";"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("MissingColumn"), std::string::npos) << bad.err;
    std::filesystem::remove(path);
}
