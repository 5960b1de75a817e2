// Copyright 2026 The contractsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "contractsched/cli.hpp"

namespace cs = contractsched;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "contractsched");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cs::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

TEST(Cli, Bounds) {
    const auto r = run({"bounds", "--r", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "c_r=2"));
    EXPECT_TRUE(has_line(r.out, "b_r=2"));
    EXPECT_TRUE(has_line(r.out, "h_dom=0.2"));
    EXPECT_NE(r.out.find("h_lower=0.101"), std::string::npos);
}

TEST(Cli, ParetoSchedule) {
    const auto r = run({"schedule", "--kind", "pareto", "--r", "4", "--tau", "10", "--tmax", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::vector<std::string> rows;
    for (std::string l; std::getline(in, l);)
        if (!l.empty() && l[0] != '#' && l.rfind("index", 0) != 0) rows.push_back(l);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows.back().substr(rows.back().rfind(',') + 1), "10");
}

TEST(Cli, EvalFloor) {
    const auto r = run({"eval", "--kind", "exp", "--base", "2", "--T", "1.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "largest=1"));
    EXPECT_TRUE(has_line(r.out, "ratio=1.5"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cs::kExitUsage);
    EXPECT_EQ(run({"launch"}).code, cs::kExitUsage);
    const auto unknown = run({"bounds", "--bogus", "3"});
    EXPECT_EQ(unknown.code, cs::kExitUsage);
    EXPECT_NE(unknown.err.find("--bogus"), std::string::npos);
    const auto range = run({"bounds", "--r", "3"});
    EXPECT_EQ(range.code, cs::kExitUsage);
    EXPECT_NE(range.err.find("--r"), std::string::npos);
    const auto missing = run({"schedule", "--kind", "pareto"});
    EXPECT_EQ(missing.code, cs::kExitUsage);
    EXPECT_NE(missing.err.find("--tau"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, cs::kExitOk);
}

TEST(Cli, RuntimeErrorExitCode) {
    const auto r = run({"experiment", "--points", "3", "--trials", "2", "--out", "/proc/contractsched/x.csv"});
    EXPECT_EQ(r.code, cs::kExitRuntime);
    EXPECT_NE(r.err.find("/proc/contractsched"), std::string::npos);
}

TEST(Cli, EchoedConfigReproducesTheRun) {
    const auto dir = std::filesystem::temp_directory_path() / "contractsched_cli";
    std::filesystem::create_directories(dir);
    const auto first = run({"experiment", "--setting", "query", "--points", "12", "--trials", "9", "--p",
                            "0.1,0.3", "--seed", "5", "--H", "0.15"});
    ASSERT_EQ(first.code, 0) << first.err;
    const auto cfg = dir / "echo.toml";
    std::ofstream(cfg) << first.err;
    const auto second = run({"experiment", "--config", cfg.string()});
    ASSERT_EQ(second.code, 0) << second.err;
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.err, second.err);
    // Flags win over the file.
    const auto third = run({"experiment", "--config", cfg.string(), "--trials", "10"});
    EXPECT_NE(third.err.find("trials=10"), std::string::npos);
    std::ofstream(dir / "bad.toml") << "[experiment]\nbogus=1\n";
    EXPECT_EQ(run({"experiment", "--config", (dir / "bad.toml").string()}).code, cs::kExitUsage);
}

TEST(Cli, OutCreatesDirectories) {
    const auto dir = std::filesystem::temp_directory_path() / "contractsched_cli" / "deep" / "er";
    std::filesystem::remove_all(dir);
    const auto r = run({"bounds", "--out", (dir / "b.csv").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(dir / "b.csv");
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "quantity,value");
}

}  // namespace
