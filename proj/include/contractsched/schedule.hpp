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

#ifndef CONTRACTSCHED_SCHEDULE_HPP_
#define CONTRACTSCHED_SCHEDULE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace contractsched {

// A completion within this relative distance of the interruption counts as completed.
inline constexpr double kCompletionTolerance = 1e-12;

// Relative offset used to place an interruption "infinitesimally" before a completion.
inline constexpr double kWorstCaseOffset = 1e-9;

// Interruption placed just before `completion`, where the schedule has not yet finished it.
inline double just_before(double completion) { return completion * (1.0 - kWorstCaseOffset); }

// An increasing sequence of contract lengths executed back to back.
//
// Two representations share one interface: an explicit finite list of lengths and an
// unbounded geometric sequence x(i) = scale * base^i. Contracts are indexed from 1;
// completion(i) is the sum of the first i lengths. Geometric lengths and completions are
// evaluated in closed form so nothing accumulates rounding error as i grows.
class ContractSchedule {
  public:
    static ContractSchedule explicit_lengths(std::vector<double> lengths);
    static ContractSchedule geometric(double base, double scale = 1.0);

    bool is_geometric() const { return geometric_; }
    double base() const { return base_; }
    double scale() const { return scale_; }

    // Number of contracts; nullopt for an unbounded geometric schedule.
    std::optional<std::size_t> size() const;

    // Length of contract i (i >= 1). Throws DomainError past the end of an explicit list.
    double length(std::size_t i) const;
    // Sum of the first i lengths; completion(0) == 0.
    double completion(std::size_t i) const;

    // Number of contracts completed by time t (completion <= t, with the tie tolerance).
    std::size_t completed_count(double t) const;

    // Every length multiplied by factor.
    ContractSchedule scaled(double factor) const;

    // Human-readable identifier, e.g. "geometric(base=2,scale=1)".
    std::string label() const;

  private:
    ContractSchedule() = default;

    bool geometric_ = false;
    double base_ = 0.0;
    double scale_ = 1.0;
    std::vector<double> lengths_;
    std::vector<double> prefix_;
};

// Result of evaluating a schedule at one interruption.
struct EvalRecord {
    double interruption = 0.0;
    double largest = 0.0;  // largest completed contract, floored at 1
    double ratio = 0.0;    // interruption / largest
    std::string schedule_id;
};

struct PrefixEntry {
    std::size_t index = 0;
    double length = 0.0;
    double completion = 0.0;
};

// Largest contract completed by interruption t; 1 when nothing has completed yet.
// Throws DomainError for t < 1.
double largest_completed(const ContractSchedule& schedule, double t);

// Pointwise acceleration ratio t / largest_completed(schedule, t).
EvalRecord acceleration_ratio(const ContractSchedule& schedule, double t);

// max over i in [1, max_index] of completion(i) / x(i-1) with x(0) := 1.
// For an explicit schedule the range is clipped to its length.
double empirical_robustness(const ContractSchedule& schedule, std::size_t max_index);

// All contracts finishing by horizon plus the first one finishing after it.
std::vector<PrefixEntry> schedule_prefix(const ContractSchedule& schedule, double horizon);

}  // namespace contractsched

#endif  // CONTRACTSCHED_SCHEDULE_HPP_
