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

#ifndef CONTRACTSCHED_TIME_PREDICTION_HPP_
#define CONTRACTSCHED_TIME_PREDICTION_HPP_

#include <optional>

#include "contractsched/schedule.hpp"

namespace contractsched {

// Predicted interruption time, optionally with a known bound on the relative error.
struct TimePrediction {
    double tau = 1.0;
    std::optional<double> error_bound;  // absent: the schedule is oblivious to the bound

    void validate() const;
};

enum class ErrorSign { kPositive, kNegative, kZero };

// Relative prediction error: positive means T = tau (1 + eta), negative T = tau (1 - eta).
struct SignedError {
    double eta = 0.0;
    ErrorSign sign = ErrorSign::kZero;

    // Interruption implied by this error for prediction tau.
    double interruption(double tau) const;
};

// Increasing bids with their declared robustness and consistency.
struct BiddingSequence {
    ContractSchedule bids;
    double robustness = 4.0;
    double consistency = 1.0;
};

// Geometric schedule gamma * b_r^i, scaled so some contract completes exactly at tau.
// gamma = tau / S_m for the smallest m with S_m = sum_{i<=m} b_r^i >= tau, so gamma is in
// (1/b_r, 1].
ContractSchedule pareto_schedule(double r, double tau);

// pareto_schedule(r, tau (1 - buffer)); with buffer = H this is the bound-aware schedule.
ContractSchedule buffered_schedule(double r, double tau, double buffer);
ContractSchedule bound_aware_schedule(double r, const TimePrediction& prediction);

// Upper bound on the acceleration ratio of buffered_schedule(r, tau, buffer) when the
// interruption deviates from tau by `error`.
double buffered_ratio_bound(double r, double buffer, const SignedError& error);

struct ErrorBoundThresholds {
    double lower = 0.0;      // below this no bound-aware r-robust schedule does better
    double dominance = 0.0;  // below this no bound-aware r-robust schedule dominates
};

// Solves (1+H)/(1-H) = q in closed form for q = sqrt((c_r+1)/c_r) and q = (c_r+1)/c_r.
ErrorBoundThresholds h_thresholds(double r);

// Competitive ratio of bids against target u: (sum of bids up to the first bid >= u) / u.
double bidding_ratio(const ContractSchedule& bids, double target);

// Contract schedule built from a bidding sequence: normalise so the first bid >= tau equals
// tau, then divide every bid by the declared consistency.
ContractSchedule bidding_to_schedule(const BiddingSequence& bidding, double tau);

// Inverse map: multiply contract lengths by the consistency to obtain bids. The declared
// robustness is measured on the bids around `target`. The declared consistency is taken on
// trust; bidding_ratio(result.bids, target) tells whether it holds.
BiddingSequence schedule_to_bidding(const ContractSchedule& schedule, double consistency,
                                    double target);

// Reports whether largest_completed(schedule, t) <= t / c_r (+1e-9). Requires the schedule
// to be r-robust over the prefix up to t; throws DomainError otherwise.
bool size_bound_check(const ContractSchedule& schedule, double t, double r);

}  // namespace contractsched

#endif  // CONTRACTSCHED_TIME_PREDICTION_HPP_
