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

#include "contractsched/noise.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include <fmt/core.h>

#include "contractsched/errors.hpp"

namespace contractsched {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 keyed_engine(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s0 = splitmix64(seed);
    const std::uint64_t s1 = splitmix64(s0 ^ a);
    const std::uint64_t s2 = splitmix64(s1 ^ b);
    std::seed_seq seq{static_cast<std::uint32_t>(s0), static_cast<std::uint32_t>(s0 >> 32),
                      static_cast<std::uint32_t>(s1), static_cast<std::uint32_t>(s1 >> 32),
                      static_cast<std::uint32_t>(s2), static_cast<std::uint32_t>(s2 >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

std::string to_string(NoiseKind kind) {
    return kind == NoiseKind::kUniform ? "uniform" : "normal";
}

NoiseKind noise_kind_from_string(const std::string& name) {
    if (name == "normal" || name == "truncated-normal") return NoiseKind::kTruncatedNormal;
    if (name == "uniform") return NoiseKind::kUniform;
    throw ConfigError(fmt::format("unknown noise kind '{}' (expected normal or uniform)", name));
}

TimeNoiseModel TimeNoiseModel::truncated_normal(double bound) {
    return truncated_normal(bound, bound / 2.0);
}

TimeNoiseModel TimeNoiseModel::truncated_normal(double bound, double sigma) {
    TimeNoiseModel m{NoiseKind::kTruncatedNormal, bound, sigma};
    m.validate();
    return m;
}

TimeNoiseModel TimeNoiseModel::uniform(double bound) {
    TimeNoiseModel m{NoiseKind::kUniform, bound, 0.0};
    m.validate();
    return m;
}

void TimeNoiseModel::validate() const {
    if (!(bound >= 0.0 && bound < 1.0))
        throw ConfigError(fmt::format("noise bound H={} must lie in [0, 1)", bound));
    if (kind == NoiseKind::kTruncatedNormal && bound > 0.0 && !(sigma > 0.0))
        throw ConfigError(fmt::format("noise sigma={} must be positive", sigma));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t key_a, std::uint64_t key_b)
    : seed_(seed), engine_(keyed_engine(seed, key_a, key_b)) {}

double RngStream::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::uint64_t key_for_value(double value) { return std::bit_cast<std::uint64_t>(value); }

double sample_signed_error(const TimeNoiseModel& model, RngStream& rng) {
    if (model.bound == 0.0) return 0.0;
    if (model.kind == NoiseKind::kUniform) return rng.uniform(-model.bound, model.bound);
    std::normal_distribution<double> normal(0.0, model.sigma);
    for (;;) {
        const double e = normal(rng.engine());
        if (std::abs(e) <= model.bound) return e;
    }
}

TimePrediction sample_tau(double t, const TimeNoiseModel& model, RngStream& rng) {
    model.validate();
    if (!(t * (1.0 - model.bound) >= 1.0 - 1e-12))
        throw DomainError(fmt::format("interruption {} is below 1/(1-H) for H={}", t, model.bound));
    const double e = sample_signed_error(model, rng);
    return {t / (1.0 + e), model.bound};
}

SignedError error_of(double tau, double t) {
    if (!(tau >= 1.0) || !(t >= 1.0)) throw DomainError("tau and T must both be at least 1");
    if (t > tau) return {t / tau - 1.0, ErrorSign::kPositive};
    if (t < tau) return {1.0 - t / tau, ErrorSign::kNegative};
    return {0.0, ErrorSign::kZero};
}

AnswerBits flip_bits(const AnswerBits& answers, double eta, RngStream& rng) {
    if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError(fmt::format("eta={} outside [0, 1]", eta));
    const std::size_t n = answers.bits.size();
    // Guard against products like 0.29 * 100 = 28.999999999999996.
    const auto flips = static_cast<std::size_t>(std::floor(eta * static_cast<double>(n) + 1e-9));
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    // Partial Fisher-Yates: the first `flips` slots end up a uniform sample without replacement.
    for (std::size_t i = 0; i < flips; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(positions[i], positions[pick(rng.engine())]);
    }
    AnswerBits out = answers;
    for (std::size_t i = 0; i < flips; ++i) out.bits[positions[i]] = !out.bits[positions[i]];
    out.eta = n == 0 ? 0.0 : static_cast<double>(flips) / static_cast<double>(n);
    return out;
}

}  // namespace contractsched
