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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "contractsched/errors.hpp"
#include "contractsched/robustness.hpp"
#include "contractsched/schedule.hpp"
#include "contractsched/time_prediction.hpp"
#include "oracles.hpp"

namespace cs = contractsched;

namespace {

std::vector<double> prefix_lengths(const cs::ContractSchedule& s, std::size_t count) {
    return oracle::lengths([&](std::size_t i) { return s.length(i); }, count);
}

TEST(Pareto, TauTenAtRFour) {
    const auto s = cs::pareto_schedule(4.0, 10.0);
    EXPECT_NEAR(s.length(1), 10.0 / 14.0 * 2.0, 1e-12);
    const auto c = oracle::completions(prefix_lengths(s, 5));
    EXPECT_NEAR(c[2], 10.0, 1e-12);
    EXPECT_NEAR(cs::acceleration_ratio(s, 10.0).ratio, 1.75, 1e-12);
}

TEST(Pareto, TauSixIsTheDoublingSchedule) {
    const auto s = cs::pareto_schedule(4.0, 6.0);
    EXPECT_NEAR(s.scale(), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(cs::acceleration_ratio(s, 6.0).ratio, 1.5);
}

TEST(Pareto, ConsistencyAtTau) {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> rr(4.0, 12.0), logtau(0.0, std::log(1e7));
    for (int k = 0; k < 300; ++k) {
        const double r = rr(gen), tau = std::exp(logtau(gen));
        const auto s = cs::pareto_schedule(r, tau);
        const auto xs = prefix_lengths(s, 60);
        EXPECT_LE(oracle::ratio(xs, tau), cs::cr_br(r).consistency + 1e-9) << r << " " << tau;
        EXPECT_LE(cs::empirical_robustness(s, 40), r + 1e-4);
    }
}

TEST(Buffered, Examples) {
    const auto s = cs::buffered_schedule(4.0, 1000.0, 0.1);
    EXPECT_LE(cs::acceleration_ratio(s, 1000.0).ratio, 2.0 / 0.9 + 1e-9);
    EXPECT_LE(cs::acceleration_ratio(s, 950.0).ratio, 2.0 * 0.95 / 0.9 + 1e-9);
    const auto z = cs::buffered_schedule(4.0, 1000.0, 0.0);
    const auto p = cs::pareto_schedule(4.0, 1000.0);
    EXPECT_EQ(z.base(), p.base());
    EXPECT_EQ(z.scale(), p.scale());
    EXPECT_THROW(cs::buffered_schedule(4.0, 1000.0, 1.0), cs::DomainError);
    EXPECT_THROW(cs::buffered_schedule(4.0, 1.05, 0.1), cs::DomainError);
}

TEST(Buffered, BoundAwareUsesTheErrorBound) {
    const auto a = cs::bound_aware_schedule(4.0, cs::TimePrediction{500.0, 0.2});
    const auto b = cs::buffered_schedule(4.0, 500.0, 0.2);
    EXPECT_EQ(a.scale(), b.scale());
    const auto o = cs::bound_aware_schedule(4.0, cs::TimePrediction{500.0, std::nullopt});
    EXPECT_EQ(o.scale(), cs::pareto_schedule(4.0, 500.0).scale());
}

TEST(BufferedRatioBound, Examples) {
    using cs::ErrorSign;
    EXPECT_NEAR(cs::buffered_ratio_bound(4.0, 0.1, {0.1, ErrorSign::kPositive}), 2.0 * 1.1 / 0.9, 1e-12);
    EXPECT_EQ(cs::buffered_ratio_bound(4.0, 0.05, {0.08, ErrorSign::kNegative}), 4.0);
    EXPECT_EQ(cs::buffered_ratio_bound(4.0, 0.0, {0.0, ErrorSign::kZero}), 2.0);
    EXPECT_EQ(cs::buffered_ratio_bound(4.0, 0.0, {3.0, ErrorSign::kPositive}), 4.0);
}

TEST(BufferedRatioBound, HoldsOnAGrid) {
    for (double p : {0.0, 0.05, 0.1, 0.2, 0.3, 0.6}) {
        const double tau = 1e4;
        const auto xs = prefix_lengths(cs::buffered_schedule(4.0, tau, p), 60);
        for (int k = 0; k < 100; ++k) {
            const double eta = k / 100.0;
            for (auto sign : {cs::ErrorSign::kPositive, cs::ErrorSign::kNegative}) {
                const cs::SignedError err{eta, k == 0 ? cs::ErrorSign::kZero : sign};
                const double t = err.interruption(tau);
                ASSERT_LE(oracle::ratio(xs, t), cs::buffered_ratio_bound(4.0, p, err) + 1e-6)
                    << "p=" << p << " eta=" << eta;
            }
        }
    }
}

TEST(BufferedRatioBound, SharpForLargeTau) {
    // The finite geometric sum leaves a factor (1 - b^-m) below the bound, which vanishes as
    // tau grows.
    for (double p : {0.0, 0.1, 0.3}) {
        const double bound = std::min(2.0 / (1.0 - p), 4.0);
        EXPECT_NEAR(cs::acceleration_ratio(cs::buffered_schedule(4.0, 1e10, p), 1e10).ratio, bound, 1e-6);
        const double small = cs::acceleration_ratio(cs::buffered_schedule(4.0, 100.0, p), 100.0).ratio;
        EXPECT_LE(small, bound + 1e-12);
        EXPECT_GT(small, bound * 0.97);
    }
}

TEST(Thresholds, RFour) {
    const auto h = cs::h_thresholds(4.0);
    EXPECT_NEAR(h.lower, 0.101, 5e-4);
    EXPECT_NEAR(h.dominance, 0.2, 1e-12);
}

TEST(Thresholds, LargeRLimit) {
    const auto h = cs::h_thresholds(1e9);
    EXPECT_NEAR(h.dominance, 1.0 / 3.0, 1e-6);
    for (int k = 0; k <= 100; ++k) {
        const auto t = cs::h_thresholds(4.0 + k * 0.25);
        EXPECT_LT(t.lower, t.dominance);
    }
}

TEST(Bidding, DoublingToSchedule) {
    const auto bids = cs::ContractSchedule::geometric(2.0);
    const auto s = cs::bidding_to_schedule({bids, 4.0, 2.0}, 8.0);
    const auto xs = prefix_lengths(s, 10);
    EXPECT_EQ(xs[0], 1.0);
    EXPECT_EQ(xs[2], 4.0);
    const auto c = oracle::completions(xs);
    // The length-4 contract is the third one: 1 + 2 + 4.
    EXPECT_EQ(c[2], 7.0);
    EXPECT_LE(c[2], 8.0);
}

TEST(Bidding, UnitConsistencyIsARescaling) {
    const auto bids = cs::ContractSchedule::geometric(3.0, 0.5);
    const auto s = cs::bidding_to_schedule({bids, 4.5, 1.0}, 20.0);
    const double f = s.length(1) / bids.length(1);
    for (std::size_t i = 1; i <= 20; ++i) EXPECT_NEAR(s.length(i), f * bids.length(i), 1e-9 * s.length(i));
    const auto back = cs::schedule_to_bidding(s, 1.0, 20.0);
    for (std::size_t i = 1; i <= 20; ++i) EXPECT_DOUBLE_EQ(back.bids.length(i), s.length(i));
    EXPECT_EQ(back.consistency, 1.0);
}

TEST(Bidding, RoundTripKeepsPerformance) {
    const auto bids = cs::ContractSchedule::geometric(2.0);
    const double tau = 8.0;
    const double s = bids.completion(3) / bids.length(3);  // 14 / 8
    const auto sched = cs::bidding_to_schedule({bids, 4.0, s}, tau);
    const auto back = cs::schedule_to_bidding(sched, s, tau);
    EXPECT_NEAR(back.consistency, s, 1e-9);
    EXPECT_NEAR(back.robustness, cs::empirical_robustness(bids, 40), 1e-9);
    const double f = back.bids.length(1) / bids.length(1);
    for (std::size_t i = 1; i <= 30; ++i) EXPECT_NEAR(back.bids.length(i) / bids.length(i), f, 1e-9 * f);
}

TEST(Bidding, ParetoScheduleCostAtTarget) {
    for (double tau : {10.0, 777.0, 123456.0}) {
        const auto bids = cs::schedule_to_bidding(cs::pareto_schedule(4.0, tau), 2.0, tau);
        EXPECT_LE(cs::bidding_ratio(bids.bids, tau), 2.0 + 1e-9);
        EXPECT_LE(bids.robustness, 4.0 + 1e-6);
    }
    EXPECT_THROW(cs::schedule_to_bidding(cs::ContractSchedule::geometric(2.0), 0.0, 5.0), cs::DomainError);
}

TEST(SizeBound, Examples) {
    const auto doubling = cs::ContractSchedule::geometric(2.0);
    EXPECT_TRUE(cs::size_bound_check(doubling, cs::just_before(6.0), 4.0));
    EXPECT_FALSE(cs::size_bound_check(doubling, 6.0, 4.0));
    EXPECT_TRUE(cs::size_bound_check(cs::ContractSchedule::geometric(2.0, 2.0), 3.0, 4.0));
    EXPECT_THROW(cs::size_bound_check(cs::ContractSchedule::geometric(5.0), 10.0, 4.0), cs::DomainError);
}

TEST(SizeBound, ParetoAtTauApproachesTheBoundary) {
    // At t = tau the completed contract is tau / (2 - 2^(1-m)), a hair above tau / c_r.
    double previous = 2.0;
    for (double tau : {10.0, 1e3, 1e6, 1e9}) {
        const auto s = cs::pareto_schedule(4.0, tau);
        const double excess = cs::largest_completed(s, tau) / (tau / 2.0);
        EXPECT_GE(excess, 1.0);
        EXPECT_LE(excess, previous);
        previous = excess;
        EXPECT_TRUE(cs::size_bound_check(s, cs::just_before(tau), 4.0));
    }
    EXPECT_NEAR(previous, 1.0, 1e-8);
}

}  // namespace
