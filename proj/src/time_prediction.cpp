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

#include "contractsched/time_prediction.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "contractsched/errors.hpp"
#include "contractsched/robustness.hpp"

namespace contractsched {

namespace {

// Robustness is measured over this many contracts beyond the region of interest.
constexpr std::size_t kRobustnessLookahead = 40;

void check_buffer(double buffer) {
    if (!(buffer >= 0.0 && buffer < 1.0))
        throw DomainError(fmt::format("buffer {} must lie in [0, 1)", buffer));
}

std::size_t first_bid_at_least(const ContractSchedule& bids, double target) {
    if (bids.is_geometric()) {
        const double guess = std::log(target / bids.scale()) / std::log(bids.base());
        auto m = static_cast<std::size_t>(std::max(1.0, std::ceil(guess)));
        while (m > 1 && bids.length(m - 1) >= target) --m;
        while (bids.length(m) < target) ++m;
        return m;
    }
    const std::size_t n = *bids.size();
    for (std::size_t m = 1; m <= n; ++m)
        if (bids.length(m) >= target) return m;
    throw DomainError(fmt::format("no bid reaches target {} within the {} explicit bids", target, n));
}

std::size_t robustness_horizon(const ContractSchedule& schedule, double t) {
    const std::size_t horizon = schedule.completed_count(t) + kRobustnessLookahead;
    if (auto n = schedule.size()) return std::min(horizon, *n);
    return horizon;
}

}  // namespace

void TimePrediction::validate() const {
    if (!(tau >= 1.0)) throw DomainError(fmt::format("prediction tau={} is before unit time", tau));
    if (error_bound && !(*error_bound >= 0.0 && *error_bound <= 1.0))
        throw DomainError(fmt::format("error bound H={} must lie in [0, 1]", *error_bound));
}

double SignedError::interruption(double tau) const {
    switch (sign) {
        case ErrorSign::kPositive: return tau * (1.0 + eta);
        case ErrorSign::kNegative: return tau * (1.0 - eta);
        case ErrorSign::kZero: break;
    }
    return tau;
}

ContractSchedule pareto_schedule(double r, double tau) {
    const RobustnessParams params = cr_br(r);
    if (!(tau >= 1.0)) throw DomainError(fmt::format("prediction tau={} is before unit time", tau));
    const ContractSchedule unit = ContractSchedule::geometric(params.base);
    std::size_t m = unit.completed_count(tau);
    if (m == 0 || unit.completion(m) < tau) ++m;
    return ContractSchedule::geometric(params.base, tau / unit.completion(m));
}

ContractSchedule buffered_schedule(double r, double tau, double buffer) {
    check_buffer(buffer);
    const double target = tau * (1.0 - buffer);
    if (!(target >= 1.0))
        throw DomainError(fmt::format("buffered target tau(1-p)={} is before unit time", target));
    return pareto_schedule(r, target);
}

ContractSchedule bound_aware_schedule(double r, const TimePrediction& prediction) {
    prediction.validate();
    return buffered_schedule(r, prediction.tau, prediction.error_bound.value_or(0.0));
}

double buffered_ratio_bound(double r, double buffer, const SignedError& error) {
    const RobustnessParams params = cr_br(r);
    check_buffer(buffer);
    const double base = params.consistency / (1.0 - buffer);
    switch (error.sign) {
        case ErrorSign::kPositive: return std::min(base * (1.0 + error.eta), r);
        case ErrorSign::kNegative:
            if (error.eta <= buffer) return std::min(base * (1.0 - error.eta), r);
            return r;
        case ErrorSign::kZero: break;
    }
    return std::min(base, r);
}

ErrorBoundThresholds h_thresholds(double r) {
    const double c = cr_br(r).consistency;
    const auto solve = [](double q) { return (q - 1.0) / (q + 1.0); };
    const double q_dom = (c + 1.0) / c;
    return {solve(std::sqrt(q_dom)), solve(q_dom)};
}

double bidding_ratio(const ContractSchedule& bids, double target) {
    if (!(target >= 1.0)) throw DomainError("bidding target must be at least 1");
    return bids.completion(first_bid_at_least(bids, target)) / target;
}

ContractSchedule bidding_to_schedule(const BiddingSequence& bidding, double tau) {
    if (!(tau >= 1.0)) throw DomainError(fmt::format("prediction tau={} is before unit time", tau));
    if (!(bidding.consistency > 0.0)) throw DomainError("declared consistency must be positive");
    const std::size_t m = first_bid_at_least(bidding.bids, tau);
    return bidding.bids.scaled(tau / bidding.bids.length(m) / bidding.consistency);
}

BiddingSequence schedule_to_bidding(const ContractSchedule& schedule, double consistency,
                                    double target) {
    if (!(consistency > 0.0)) throw DomainError("consistency must be positive");
    BiddingSequence out{schedule.scaled(consistency), 0.0, consistency};
    out.robustness = empirical_robustness(out.bids, robustness_horizon(out.bids, target));
    return out;
}

bool size_bound_check(const ContractSchedule& schedule, double t, double r) {
    const RobustnessParams params = cr_br(r);
    const double measured = empirical_robustness(schedule, robustness_horizon(schedule, t));
    if (measured > r + 1e-6)
        throw DomainError(fmt::format("schedule has robustness {} > r={}", measured, r));
    return largest_completed(schedule, t) <= t / params.consistency + 1e-9;
}

}  // namespace contractsched
