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

#include <ecrt/mesa_sim.hpp>

#include <gtest/gtest.h>

#include <array>

namespace {

namespace sim = ecrt::sim;

TEST(CostTable, Defaults) {
    const auto c = sim::default_cost_table(1024);
    EXPECT_EQ(c.post_cycles(), 5222u);
    EXPECT_EQ(c.pre_cycles(), 2087u);
    EXPECT_EQ(sim::default_cost_table(2048).mm_h * 342 + sim::default_cost_table(2048).stage_overhead, 57700u);
    EXPECT_THROW(sim::default_cost_table(512), ecrt::InvalidArgumentError);
}

TEST(Pipeline, StageCycles1024) {
    const auto cfg = sim::make_config(1024, 12, 100.0);
    const std::vector<sim::Cycles> expected{2087, 7567, 7567, 7567, 7567, 7567, 82 * 87 + 85, 5222};
    EXPECT_EQ(sim::stage_cycles(cfg), expected);
}

TEST(Pipeline, TraceFollowsInitiationInterval) {
    const auto cfg = sim::make_config(1024, 12, 100.0);
    const auto r = sim::timing_report(cfg, 20);
    ASSERT_EQ(r.trace.size(), 20u);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        EXPECT_EQ(r.trace[i].exit_cycle, r.fill_latency_cycles + i * r.initiation_interval_cycles);
    }
    EXPECT_EQ(r.fill_latency_cycles, 2087u + 5 * 7567 + 82 * 87 + 85 + 5222);
    EXPECT_DOUBLE_EQ(r.me_utilization, 1.0);
    EXPECT_FALSE(r.post_dominant);
}

TEST(Pipeline, PostDominanceWithManyUnits) {
    const auto cfg = sim::make_config(1024, 24, 100.0);
    const auto r = sim::timing_report(cfg, 0);
    EXPECT_TRUE(r.post_dominant);
    EXPECT_EQ(r.initiation_interval_cycles, 5222u);
    EXPECT_LT(r.me_utilization, 1.0);
}

TEST(Pipeline, ConfigValidation) {
    EXPECT_THROW(sim::make_config(1024, 3, 100.0), ecrt::InvalidArgumentError);
    EXPECT_THROW(sim::make_config(1024, 0, 100.0), ecrt::InvalidArgumentError);
    EXPECT_THROW(sim::make_config(1024, 12, 0.0), ecrt::InvalidArgumentError);
    auto cfg = sim::make_config(1024, 12, 100.0);
    cfg.cost.div = 0;
    EXPECT_THROW(cfg.validate(), ecrt::InvalidArgumentError);
}

TEST(Pipeline, BaselineIsSlower) {
    const auto cfg = sim::make_config(1024, 12, 100.0);
    EXPECT_EQ(sim::baseline_monolithic_cycles(cfg), 2087u + 512 * 87 + 85 + 5222);
    EXPECT_GT(sim::baseline_monolithic_cycles(cfg), sim::timing_report(cfg, 0).initiation_interval_cycles);
    EXPECT_LT(sim::baseline_me_utilization(cfg), 1.0);
}

TEST(Sweep, CsvLayout) {
    const std::array<std::size_t, 2> counts{2, 4};
    const auto rows = sim::sweep_me_count(sim::make_config(1024, 2, 100.0), counts);
    const auto csv = sim::sweep_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "num_me,ii_cycles,fill_cycles,ops_per_sec,tp_kbit_s");
    EXPECT_EQ(rows[0].ii_cycles, 512u * 87 + 85);
    EXPECT_EQ(rows[1].ii_cycles, 256u * 87 + 85);
}

TEST(Batch, MatchesDirectDecryption) {
    ecrt::DefaultRng rng(3);
    const auto key = ecrt::DecryptionKey::from(ecrt::keygen(1024, rng));
    std::vector<ecrt::Ciphertext> cs;
    std::vector<ecrt::Nat> ms;
    for (int i = 0; i < 4; ++i) {
        ms.push_back(ecrt::random_below(rng, key.pk.n));
        cs.push_back(ecrt::encrypt(key.pk, ms.back(), rng));
    }
    for (std::size_t me : {2u, 6u, 12u}) {
        const auto result = sim::simulate_batch(sim::make_config(1024, me, 100.0), key.pk, key.sk, key.ecrt, cs);
        EXPECT_EQ(result.plaintexts, ms) << me;
        EXPECT_EQ(result.report.trace.size(), cs.size());
    }
    EXPECT_THROW(sim::simulate_batch(sim::make_config(2048, 6, 100.0), key.pk, key.sk, key.ecrt, cs),
                 ecrt::InvalidArgumentError);
}

} // namespace
