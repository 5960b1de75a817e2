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

#include "contractsched/query_prediction.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "contractsched/errors.hpp"
#include "contractsched/robustness.hpp"

namespace contractsched {

namespace {

void check_queries(int queries) {
    if (queries < 1) throw DomainError(fmt::format("need at least one query (got {})", queries));
}

void check_buffer(double buffer) {
    if (!(buffer >= 0.0 && buffer <= 0.5))
        throw DomainError(fmt::format("query buffer p={} must lie in [0, 1/2]", buffer));
}

// Base choice shared by both families: b_r while it is feasible for the unconstrained
// optimum, otherwise 1 + k.
double choose_base(double r, double k) {
    const RobustnessParams params = cr_br(r);
    if (r <= (1.0 + k) * (1.0 + k) / k) return params.base;
    return 1.0 + k;
}

}  // namespace

QueryFamily::QueryFamily(FamilyMode mode, int queries, double r, double base, double buffer)
    : mode_(mode), queries_(queries), r_(r), base_(base), buffer_(buffer) {
    check_queries(queries);
    if (!(base > 1.0)) throw DomainError(fmt::format("family base {} must exceed 1", base));
    if (mode == FamilyMode::kIdeal) {
        if (queries >= 63) throw ResourceError("ideal family size 2^n overflows");
        count_ = std::size_t{1} << queries;
    } else {
        check_buffer(buffer);
        count_ = static_cast<std::size_t>(queries);
    }
}

ContractSchedule QueryFamily::member(std::size_t i) const {
    if (i >= count_)
        throw DomainError(fmt::format("member {} outside family of {}", i, count_));
    // Ideal members start at d^(1 + i/count), robust members one contract earlier at d^(i/n).
    double exponent = static_cast<double>(i) / static_cast<double>(count_);
    if (mode_ == FamilyMode::kRobust) exponent -= 1.0;
    return ContractSchedule::geometric(base_, std::pow(base_, exponent));
}

std::size_t AnswerBits::no_count() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), false));
}

double ideal_base(double r, int queries) {
    check_queries(queries);
    return choose_base(r, std::ldexp(1.0, queries));
}

double ideal_consistency(double r, int queries) {
    const double d = ideal_base(r, queries);
    return std::pow(d, 1.0 + std::ldexp(1.0, -queries)) / (d - 1.0);
}

QueryFamily ideal_family(double r, int queries, int cap) {
    check_queries(queries);
    if (queries > cap)
        throw ResourceError(fmt::format("ideal family with n={} exceeds the cap n<={}", queries, cap));
    return QueryFamily(FamilyMode::kIdeal, queries, r, ideal_base(r, queries), 0.0);
}

std::size_t ideal_select(const QueryFamily& family, const AnswerBits& answers) {
    if (family.mode() != FamilyMode::kIdeal) throw DomainError("ideal_select needs an ideal family");
    if (answers.bits.size() != static_cast<std::size_t>(family.queries()))
        throw DomainError(fmt::format("expected {} answers, got {}", family.queries(),
                                      answers.bits.size()));
    std::size_t index = 0;
    for (bool bit : answers.bits) index = (index << 1) | (bit ? 1u : 0u);
    return index;
}

double consistency_lower_bound(int queries) {
    check_queries(queries);
    return std::pow(2.0, 1.0 + std::ldexp(1.0, -queries));
}

std::size_t integral_count(double fraction, int queries) {
    return static_cast<std::size_t>(std::lround(fraction * static_cast<double>(queries)));
}

RobustBase robust_base(double r, int queries, double buffer) {
    check_queries(queries);
    check_buffer(buffer);
    RobustBase out;
    out.k = (2.0 * static_cast<double>(integral_count(buffer, queries)) + 1.0) /
            static_cast<double>(queries);
    out.base = choose_base(r, out.k);
    out.bound = std::pow(out.base, 1.0 + 1.0 / queries + 2.0 * buffer) / (out.base - 1.0);
    return out;
}

QueryFamily robust_family(double r, int queries, double buffer) {
    return QueryFamily(FamilyMode::kRobust, queries, r, robust_base(r, queries, buffer).base,
                       buffer);
}

std::size_t best_index(const QueryFamily& family, double t) {
    std::size_t best = 0;
    double largest = largest_completed(family.member(0), t);
    for (std::size_t i = 1; i < family.count(); ++i) {
        const double ell = largest_completed(family.member(i), t);
        if (ell > largest) {
            largest = ell;
            best = i;
        }
    }
    return best;
}

AnswerBits encode_answers(std::size_t best, int queries) {
    check_queries(queries);
    if (best >= static_cast<std::size_t>(queries))
        throw DomainError(fmt::format("best index {} outside [0, {})", best, queries));
    AnswerBits out;
    out.bits.resize(static_cast<std::size_t>(queries));
    for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = i >= best;
    return out;
}

std::size_t decode_robust(const AnswerBits& answers, int queries, double buffer,
                          DecodeConvention convention) {
    check_queries(queries);
    check_buffer(buffer);
    if (answers.bits.size() != static_cast<std::size_t>(queries))
        throw DomainError(fmt::format("expected {} answers, got {}", queries, answers.bits.size()));
    long shift = static_cast<long>(integral_count(buffer, queries));
    if (convention == DecodeConvention::kLiteralShift) ++shift;
    const long n = queries;
    const long m = (static_cast<long>(answers.no_count()) - shift) % n;
    return static_cast<std::size_t>(m < 0 ? m + n : m);
}

std::size_t cyclic_distance_below(std::size_t from, std::size_t to, std::size_t n) {
    return (from % n + n - to % n) % n;
}

std::vector<std::vector<Interval>> partition_sets(const QueryFamily& family, double horizon) {
    if (family.mode() != FamilyMode::kRobust)
        throw DomainError("partition sets are defined for the robust family");
    if (!(horizon > 1.0)) throw DomainError("partition horizon must exceed 1");

    std::vector<double> breaks{1.0};
    for (std::size_t i = 0; i < family.count(); ++i) {
        for (const PrefixEntry& e : schedule_prefix(family.member(i), horizon))
            if (e.completion < horizon) breaks.push_back(e.completion);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    breaks.push_back(horizon);

    std::vector<std::vector<Interval>> sets(family.count());
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const Interval seg{breaks[k], breaks[k + 1]};
        const std::size_t best = best_index(family, seg.lo);
        for (std::size_t q = best; q < family.count(); ++q) {
            auto& s = sets[q];
            if (!s.empty() && s.back().hi == seg.lo) s.back().hi = seg.hi;
            else s.push_back(seg);
        }
    }
    return sets;
}

}  // namespace contractsched
