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

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "contractsched/errors.hpp"
#include "contractsched/noise.hpp"
#include "contractsched/query_prediction.hpp"
#include "contractsched/schedule.hpp"
#include "oracles.hpp"

namespace cs = contractsched;

namespace {

// Member k of a robust family of `count` schedules with base d: lengths d^(j + k/count), j >= 0.
std::vector<std::vector<double>> family_lengths(double d, std::size_t count, std::size_t depth) {
    std::vector<std::vector<double>> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(oracle::lengths(
            [&](std::size_t j) { return std::pow(d, static_cast<double>(j - 1) + static_cast<double>(k) / count); },
            depth));
    return out;
}

cs::AnswerBits bits_of(std::initializer_list<int> v) {
    cs::AnswerBits a;
    for (int b : v) a.bits.push_back(b != 0);
    return a;
}

TEST(IdealBase, Examples) {
    EXPECT_EQ(cs::ideal_base(4.0, 2), 2.0);
    EXPECT_EQ(cs::ideal_base(8.0, 1), 3.0);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(cs::ideal_base(4.0, n), 2.0);
        EXPECT_NEAR(cs::ideal_consistency(4.0, n), std::pow(2.0, 1.0 + std::ldexp(1.0, -n)), 1e-12);
    }
}

TEST(IdealFamily, MembersAreOffsetGeometrics) {
    const auto f = cs::ideal_family(4.0, 1);
    ASSERT_EQ(f.count(), 2u);
    for (std::size_t j = 1; j <= 10; ++j) {
        EXPECT_NEAR(f.member(0).length(j), std::ldexp(1.0, static_cast<int>(j)), 1e-12 * j);
        EXPECT_NEAR(f.member(1).length(j), std::pow(2.0, j + 0.5), 1e-9);
    }
    const auto f2 = cs::ideal_family(4.0, 2);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(f2.member(k).scale(), std::pow(2.0, k / 4.0), 1e-15);
    for (std::size_t k = 0; k < 8; ++k)
        EXPECT_LE(cs::empirical_robustness(cs::ideal_family(4.0, 3).member(k), 40), 4.0 + 1e-4);
    // Above r = 4 the first contract d^(1 + k/2^n) can itself exceed r, so only the
    // steady-state ratios are bounded by r.
    for (double r : {6.0, 10.0}) {
        const auto fam = cs::ideal_family(r, 3);
        const double d = fam.base();
        EXPECT_LE(d * d / (d - 1.0), r + 1e-9);
        for (std::size_t k = 0; k < 8; ++k) {
            const auto done = oracle::completions(oracle::lengths([&](std::size_t j) { return fam.member(k).length(j); }, 40));
            for (std::size_t j = 2; j <= 40; ++j)
                ASSERT_LE(done[j - 1] / fam.member(k).length(j - 1), r + 1e-4);
        }
    }
    EXPECT_THROW(cs::ideal_family(4.0, 21), cs::ResourceError);
}

TEST(IdealSelect, MostSignificantBitFirst) {
    const auto f = cs::ideal_family(4.0, 2);
    EXPECT_EQ(cs::ideal_select(f, bits_of({0, 0})), 0u);
    EXPECT_EQ(cs::ideal_select(f, bits_of({1, 1})), 3u);
    EXPECT_EQ(cs::ideal_select(f, bits_of({1, 0})), 2u);
    EXPECT_THROW(cs::ideal_select(f, bits_of({1})), cs::DomainError);
}

TEST(ConsistencyLowerBound, Values) {
    EXPECT_NEAR(cs::consistency_lower_bound(1), std::pow(2.0, 1.5), 1e-12);
    EXPECT_NEAR(cs::consistency_lower_bound(2), std::pow(2.0, 1.25), 1e-12);
    EXPECT_NEAR(cs::consistency_lower_bound(40), 2.0, 1e-9);
}

TEST(RobustBase, Examples) {
    const auto a = cs::robust_base(4.0, 100, 0.1);
    EXPECT_NEAR(a.k, 0.21, 1e-12);
    EXPECT_EQ(a.base, 2.0);
    EXPECT_NEAR(a.bound, std::pow(2.0, 1.21), 1e-12);
    for (int n : {3, 10, 50})
        for (double p : {0.0, 0.1, 0.25})
            EXPECT_NEAR(cs::robust_base(4.0, n, p).bound, std::pow(2.0, 1.0 + 1.0 / n + 2.0 * p), 1e-12);
    const auto c = cs::robust_base(10.0, 10, 0.5);
    EXPECT_NEAR(c.k, 1.1, 1e-12);
    EXPECT_NEAR(c.base, 2.1, 1e-12);
    EXPECT_THROW(cs::robust_base(4.0, 10, 0.6), cs::DomainError);
}

TEST(BestIndex, MatchesEnumeration) {
    const auto f = cs::robust_family(4.0, 4, 0.0);
    const auto members = family_lengths(2.0, 4, 45);
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> logt(0.0, std::log(1e8));
    for (int k = 0; k < 3000; ++k) {
        const double t = std::exp(logt(gen));
        ASSERT_EQ(cs::best_index(f, t), oracle::best_member(members, t)) << t;
    }
}

TEST(BestIndex, Examples) {
    const auto f = cs::robust_family(4.0, 4, 0.0);
    for (std::size_t j = 2; j <= 15; ++j) {
        EXPECT_EQ(cs::best_index(f, cs::just_before(f.member(1).completion(j))), 0u);
        for (std::size_t l = 0; l < 4; ++l) EXPECT_EQ(cs::best_index(f, f.member(l).completion(j)), l);
    }
    const cs::QueryFamily single(cs::FamilyMode::kRobust, 1, 4.0, 2.0, 0.0);
    EXPECT_EQ(cs::best_index(single, 123.0), 0u);
}

TEST(Encode, Examples) {
    EXPECT_EQ(cs::encode_answers(0, 5).bits, bits_of({1, 1, 1, 1, 1}).bits);
    EXPECT_EQ(cs::encode_answers(0, 5).no_count(), 0u);
    EXPECT_EQ(cs::encode_answers(2, 5).bits, bits_of({0, 0, 1, 1, 1}).bits);
    EXPECT_EQ(cs::encode_answers(4, 5).bits, bits_of({0, 0, 0, 0, 1}).bits);
    EXPECT_THROW(cs::encode_answers(5, 5), cs::DomainError);
}

TEST(Decode, Examples) {
    EXPECT_EQ(cs::decode_robust(cs::encode_answers(5, 10), 10, 0.2), 3u);
    EXPECT_EQ(cs::decode_robust(cs::encode_answers(1, 10), 10, 0.3), 8u);
    EXPECT_EQ(cs::decode_robust(cs::encode_answers(1, 10), 10, 0.3, cs::DecodeConvention::kLiteralShift), 7u);
    for (int n = 1; n <= 64; ++n)
        for (int l = 0; l < n; ++l) ASSERT_EQ(cs::decode_robust(cs::encode_answers(l, n), n, 0.0), std::size_t(l));
}

TEST(Decode, ProximityUnderRandomFlips) {
    cs::RngStream rng(99);
    for (double p : {0.1, 0.3, 0.5}) {
        const std::size_t k = cs::integral_count(p, 100);
        for (int trial = 0; trial < 3000; ++trial) {
            const auto l = static_cast<std::size_t>(rng.uniform(0.0, 100.0)) % 100;
            const auto noisy = cs::flip_bits(cs::encode_answers(l, 100), rng.uniform(0.0, p), rng);
            const std::size_t m = cs::decode_robust(noisy, 100, p);
            ASSERT_LE(cs::cyclic_distance_below(l, m, 100), 2 * k);
        }
    }
}

TEST(PartitionSets, TwoMembers) {
    const auto f = cs::robust_family(4.0, 2, 0.0);
    const double horizon = 1e5;
    const auto sets = cs::partition_sets(f, horizon);
    ASSERT_EQ(sets.size(), 2u);
    // The last set covers everything.
    ASSERT_EQ(sets[1].size(), 1u);
    EXPECT_EQ(sets[1][0].lo, 1.0);
    EXPECT_EQ(sets[1][0].hi, horizon);
    std::vector<double> c0, c1;
    for (std::size_t j = 1; j <= 40; ++j) {
        c0.push_back(f.member(0).completion(j));
        c1.push_back(f.member(1).completion(j));
    }
    auto is_in = [](const std::vector<double>& v, double x) {
        return std::any_of(v.begin(), v.end(), [&](double y) { return y == x; });
    };
    for (const auto& iv : sets[0]) {
        if (iv.lo != 1.0) EXPECT_TRUE(is_in(c0, iv.lo)) << iv.lo;
        if (iv.hi != horizon) EXPECT_TRUE(is_in(c1, iv.hi)) << iv.hi;
    }
}

TEST(PartitionSets, NestedAndConsistentWithAnswers) {
    const int n = 6;
    const auto f = cs::robust_family(4.0, n, 0.1);
    const double horizon = 1e6;
    const auto sets = cs::partition_sets(f, horizon);
    const auto members = family_lengths(f.base(), n, 40);
    auto contains = [](const std::vector<cs::Interval>& s, double t) {
        return std::any_of(s.begin(), s.end(), [&](const cs::Interval& iv) { return iv.lo <= t && t < iv.hi; });
    };
    for (int k = 0; k < 1000; ++k) {
        const double t = 1.0 + (horizon - 1.0) * (k + 0.5) / 1000.0;
        const auto bits = cs::encode_answers(oracle::best_member(members, t), n).bits;
        int first_in = -1;
        for (int i = 0; i < n; ++i) {
            const bool in = contains(sets[i], t);
            ASSERT_EQ(in, bits[i]) << "T=" << t << " i=" << i;
            if (in && first_in < 0) first_in = i;
        }
        // Exactly one difference set S_i \ S_{i-1} holds T.
        ASSERT_GE(first_in, 0);
    }
}

}  // namespace
