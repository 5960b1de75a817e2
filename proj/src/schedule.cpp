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

#include "contractsched/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/core.h>

#include "contractsched/errors.hpp"

namespace contractsched {

namespace {

bool finishes_by(double completion, double t) {
    return completion <= t * (1.0 + kCompletionTolerance);
}

}  // namespace

ContractSchedule ContractSchedule::explicit_lengths(std::vector<double> lengths) {
    if (lengths.empty()) throw DomainError("explicit schedule needs at least one contract");
    ContractSchedule s;
    s.prefix_.reserve(lengths.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (!(lengths[i] > 0.0) || !std::isfinite(lengths[i]))
            throw DomainError(fmt::format("contract length {} must be positive and finite", i + 1));
        if (i > 0 && !(lengths[i] > lengths[i - 1]))
            throw DomainError(fmt::format("contract lengths must strictly increase (index {})", i + 1));
        sum += lengths[i];
        s.prefix_.push_back(sum);
    }
    s.lengths_ = std::move(lengths);
    return s;
}

ContractSchedule ContractSchedule::geometric(double base, double scale) {
    if (!(base > 1.0) || !std::isfinite(base))
        throw DomainError(fmt::format("geometric base must exceed 1 (got {})", base));
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw DomainError(fmt::format("geometric scale must be positive (got {})", scale));
    ContractSchedule s;
    s.geometric_ = true;
    s.base_ = base;
    s.scale_ = scale;
    return s;
}

std::optional<std::size_t> ContractSchedule::size() const {
    if (geometric_) return std::nullopt;
    return lengths_.size();
}

double ContractSchedule::length(std::size_t i) const {
    if (i == 0) throw DomainError("contracts are indexed from 1");
    if (geometric_) return scale_ * std::pow(base_, static_cast<double>(i));
    if (i > lengths_.size())
        throw DomainError(fmt::format("contract {} past the end of an explicit schedule of {}", i,
                                      lengths_.size()));
    return lengths_[i - 1];
}

double ContractSchedule::completion(std::size_t i) const {
    if (i == 0) return 0.0;
    if (geometric_) {
        return scale_ * base_ * (std::pow(base_, static_cast<double>(i)) - 1.0) / (base_ - 1.0);
    }
    if (i > prefix_.size())
        throw DomainError(fmt::format("contract {} past the end of an explicit schedule of {}", i,
                                      prefix_.size()));
    return prefix_[i - 1];
}

std::size_t ContractSchedule::completed_count(double t) const {
    if (!geometric_) {
        const double limit = t * (1.0 + kCompletionTolerance);
        return static_cast<std::size_t>(std::upper_bound(prefix_.begin(), prefix_.end(), limit) -
                                        prefix_.begin());
    }
    if (!finishes_by(completion(1), t)) return 0;
    // Invert the closed form, then correct the guess against the exact predicate.
    const double guess = std::log1p(t * (base_ - 1.0) / (scale_ * base_)) / std::log(base_);
    auto i = static_cast<std::size_t>(std::max(1.0, std::floor(guess)));
    while (i > 1 && !finishes_by(completion(i), t)) --i;
    while (finishes_by(completion(i + 1), t)) ++i;
    return i;
}

ContractSchedule ContractSchedule::scaled(double factor) const {
    if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
    if (geometric_) return geometric(base_, scale_ * factor);
    std::vector<double> lengths = lengths_;
    for (double& x : lengths) x *= factor;
    return explicit_lengths(std::move(lengths));
}

std::string ContractSchedule::label() const {
    if (geometric_) return fmt::format("geometric(base={:.17g},scale={:.17g})", base_, scale_);
    return fmt::format("explicit(n={},x1={:.17g})", lengths_.size(), lengths_.front());
}

double largest_completed(const ContractSchedule& schedule, double t) {
    if (!(t >= 1.0))
        throw DomainError(fmt::format("interruption {} is before unit time", t));
    const std::size_t done = schedule.completed_count(t);
    if (done == 0) return 1.0;
    return std::max(1.0, schedule.length(done));
}

EvalRecord acceleration_ratio(const ContractSchedule& schedule, double t) {
    EvalRecord rec;
    rec.interruption = t;
    rec.largest = largest_completed(schedule, t);
    rec.ratio = t / rec.largest;
    rec.schedule_id = schedule.label();
    return rec;
}

double empirical_robustness(const ContractSchedule& schedule, std::size_t max_index) {
    if (max_index == 0) throw DomainError("max_index must be at least 1");
    std::size_t last = max_index;
    if (auto n = schedule.size()) last = std::min(last, *n);
    double worst = 0.0;
    double previous = 1.0;
    for (std::size_t i = 1; i <= last; ++i) {
        worst = std::max(worst, schedule.completion(i) / previous);
        previous = schedule.length(i);
    }
    return worst;
}

std::vector<PrefixEntry> schedule_prefix(const ContractSchedule& schedule, double horizon) {
    if (!(horizon >= 1.0)) throw DomainError("prefix horizon must be at least 1");
    std::vector<PrefixEntry> out;
    const auto limit = schedule.size();
    for (std::size_t i = 1; !limit || i <= *limit; ++i) {
        PrefixEntry e{i, schedule.length(i), schedule.completion(i)};
        out.push_back(e);
        if (!finishes_by(e.completion, horizon)) break;
    }
    return out;
}

}  // namespace contractsched
