/*
 * Copyright (C) 2026 The ecrt-paillier Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ecrt");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = ecrt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(ECRT_TEST_TMPDIR) + "/cli_" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliFlow : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        const auto r = run({"keygen", "--bits", "128", "--seed", "4", "--out", tmp("key.json"), "--pub-out",
                            tmp("pub.json")});
        ASSERT_EQ(r.code, 0) << r.err;
    }
};

TEST_F(CliFlow, KeygenIsDeterministic) {
    const auto r = run({"keygen", "--bits", "128", "--seed", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(tmp("key.json")));
    const auto pub = nlohmann::json::parse(slurp(tmp("pub.json")));
    EXPECT_FALSE(pub.contains("p"));
    EXPECT_EQ(pub.at("bits"), 128);
}

TEST_F(CliFlow, EncryptEvalDecrypt) {
    ASSERT_EQ(run({"encrypt", "--key", tmp("pub.json"), "--message", "20", "--message", "22", "--seed", "1",
                   "--out", tmp("a.ct")})
                  .code,
              0);
    ASSERT_EQ(run({"encrypt", "--key", tmp("pub.json"), "--message", "1", "--message", "2", "--out", tmp("b.ct")})
                  .code,
              0);
    ASSERT_EQ(run({"eval", "--key", tmp("pub.json"), "--op", "add", "--in", tmp("a.ct"), "--in2", tmp("b.ct"),
                   "--out", tmp("sum.ct")})
                  .code,
              0);
    ASSERT_EQ(run({"eval", "--key", tmp("pub.json"), "--op", "sum", "--in", tmp("a.ct"), "--out", tmp("total.ct")})
                  .code,
              0);
    ASSERT_EQ(run({"eval", "--key", tmp("pub.json"), "--op", "scalar", "--scalar", "3", "--in", tmp("a.ct"),
                   "--out", tmp("x3.ct")})
                  .code,
              0);
    for (const std::string backend : {"traditional", "crt", "ecrt"}) {
        EXPECT_EQ(run({"decrypt", "--key", tmp("key.json"), "--in", tmp("a.ct"), "--backend", backend}).out,
                  "20\n22\n");
        EXPECT_EQ(run({"decrypt", "--key", tmp("key.json"), "--in", tmp("sum.ct"), "--backend", backend}).out,
                  "21\n24\n");
        EXPECT_EQ(run({"decrypt", "--key", tmp("key.json"), "--in", tmp("total.ct"), "--backend", backend}).out,
                  "42\n");
        EXPECT_EQ(run({"decrypt", "--key", tmp("key.json"), "--in", tmp("x3.ct"), "--backend", backend}).out,
                  "60\n66\n");
    }
    EXPECT_EQ(run({"decrypt", "--key", tmp("key.json"), "--in", tmp("a.ct"), "--hex"}).out, "14\n16\n");
}

TEST_F(CliFlow, Bench) {
    const auto r = run({"bench", "--key", tmp("key.json"), "--count", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(j.at("crt").at("shared_mm").get<double>(), 2.0);
    EXPECT_DOUBLE_EQ(j.at("crt").at("shared_judgment").get<double>(), 2.5);
    EXPECT_DOUBLE_EQ(j.at("ecrt").at("shared_mm").get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(j.at("ecrt").at("shared_judgment").get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(j.at("mm_reduction_percent").get<double>(), 50.0);
    EXPECT_DOUBLE_EQ(j.at("judgment_reduction_percent").get<double>(), 60.0);

    const auto t = run({"bench", "--key", tmp("key.json"), "--count", "2"});
    ASSERT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("mm reduction 50%, judgment reduction 60%"), std::string::npos) << t.out;
}

TEST(Cli, SimulateAndSweep) {
    const auto r = run({"simulate", "--count", "2", "--seed", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("initiation_interval_cycles"), 7567);
    EXPECT_EQ(j.at("functional_check"), "pass");

    const auto s = run({"sweep", "--me-counts", "2,4,24"});
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(s.out.substr(0, s.out.find('\n')), "num_me,ii_cycles,fill_cycles,ops_per_sec,tp_kbit_s");
    const auto t = run({"sweep", "--me-counts", "12,24", "--format", "table"});
    EXPECT_NE(t.out.find("pre/post bound"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"keygen"}).code, 1);
    EXPECT_EQ(run({"decrypt", "--key", "x", "--in", "y", "--backend", "fast"}).code, 1);
    EXPECT_EQ(run({"encrypt", "--key", tmp("pub.json")}).code, 1);
    EXPECT_EQ(run({"keygen", "--bits", "63"}).code, 2);
    EXPECT_EQ(run({"decrypt", "--key", "/nonexistent.json", "--in", "y"}).code, 2);
    EXPECT_EQ(run({"simulate", "--num-me", "7"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliFlow, CryptoErrors) {
    {
        std::ofstream(tmp("bad.ct")) << "0\n";
    }
    const auto r = run({"decrypt", "--key", tmp("key.json"), "--in", tmp("bad.ct")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    EXPECT_EQ(run({"encrypt", "--key", tmp("pub.json"), "--message", "notanumber"}).code, 2);
}

} // namespace
