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

#ifndef CONTRACTSCHED_NOISE_HPP_
#define CONTRACTSCHED_NOISE_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "contractsched/query_prediction.hpp"
#include "contractsched/time_prediction.hpp"

namespace contractsched {

enum class NoiseKind { kTruncatedNormal, kUniform };

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& name);

// Distribution of the signed relative error e in [-H, H], the interruption being T = tau (1 + e).
struct TimeNoiseModel {
    NoiseKind kind = NoiseKind::kTruncatedNormal;
    double bound = 0.1;   // H
    double sigma = 0.05;  // relative standard deviation before truncation

    static TimeNoiseModel truncated_normal(double bound);  // sigma = H / 2
    static TimeNoiseModel truncated_normal(double bound, double sigma);
    static TimeNoiseModel uniform(double bound);

    void validate() const;
};

// Deterministic random stream keyed by (seed, key_a, key_b). Equal keys give equal sequences.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t key_a = 0, std::uint64_t key_b = 0);

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return engine_; }
    double uniform(double lo, double hi);

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// Stream key for a real-valued grid coordinate: depends on the value, not on its position.
std::uint64_t key_for_value(double value);

// Signed relative error drawn from the model.
double sample_signed_error(const TimeNoiseModel& model, RngStream& rng);

// Prediction for interruption t: tau = t / (1 + e) so the relative error never exceeds H.
// Requires t >= 1 / (1 - H).
TimePrediction sample_tau(double t, const TimeNoiseModel& model, RngStream& rng);

// Signed error of prediction tau for interruption t.
SignedError error_of(double tau, double t);

// Flips exactly floor(eta * n) distinct uniformly chosen answers.
AnswerBits flip_bits(const AnswerBits& answers, double eta, RngStream& rng);

}  // namespace contractsched

#endif  // CONTRACTSCHED_NOISE_HPP_
