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

#ifndef CONTRACTSCHED_QUERY_PREDICTION_HPP_
#define CONTRACTSCHED_QUERY_PREDICTION_HPP_

#include <cstddef>
#include <vector>

#include "contractsched/schedule.hpp"

namespace contractsched {

enum class FamilyMode {
    kIdeal,   // 2^n members, selected by the answers read as a binary index
    kRobust,  // n members, selected by counting "no" answers with a cyclic buffer
};

inline constexpr int kDefaultIdealQueryCap = 20;

// Indexed set of r-robust schedules, member i having lengths base^(j + i / count), j >= 1.
class QueryFamily {
  public:
    QueryFamily(FamilyMode mode, int queries, double r, double base, double buffer);

    FamilyMode mode() const { return mode_; }
    int queries() const { return queries_; }
    double r() const { return r_; }
    double base() const { return base_; }
    double buffer() const { return buffer_; }
    std::size_t count() const { return count_; }

    // Lengths d^(j + i/count): j >= 1 for the ideal family, j >= 0 for the robust one.
    ContractSchedule member(std::size_t i) const;

  private:
    FamilyMode mode_;
    int queries_;
    double r_;
    double base_;
    double buffer_;
    std::size_t count_;
};

// Answers to the n queries plus the fraction of them that were corrupted.
struct AnswerBits {
    std::vector<bool> bits;
    double eta = 0.0;

    std::size_t no_count() const;
};

// Base b_r when r <= (1 + 2^n)^2 / 2^n, otherwise 1 + 2^n.
double ideal_base(double r, int queries);
// Error-free consistency base^(1 + 1/2^n) / (base - 1) of the ideal family.
double ideal_consistency(double r, int queries);
// Throws ResourceError when queries exceeds cap.
QueryFamily ideal_family(double r, int queries, int cap = kDefaultIdealQueryCap);
// Reads the answers as a binary number, first answer most significant.
std::size_t ideal_select(const QueryFamily& family, const AnswerBits& answers);

// 2^(1 + 1/2^n): no 4-robust schedule with n answer bits has lower consistency.
double consistency_lower_bound(int queries);

struct RobustBase {
    double k = 0.0;      // (2 round(pn) + 1) / n
    double base = 2.0;   // b_r if r <= (1+k)^2/k, else 1 + k
    double bound = 0.0;  // base^(1 + 1/n + 2p) / (base - 1)
};
RobustBase robust_base(double r, int queries, double buffer);
QueryFamily robust_family(double r, int queries, double buffer);

// Member with the largest completed contract at t; smallest index on ties.
std::size_t best_index(const QueryFamily& family, double t);

// Answer i is "yes" iff the best member lies in {X_0, ..., X_i}; exactly `best` answers are "no".
AnswerBits encode_answers(std::size_t best, int queries);

enum class DecodeConvention {
    kIdentity,      // m = (N - round(pn)) mod n
    kLiteralShift,  // m = (N - 1 - round(pn)) mod n
};

std::size_t decode_robust(const AnswerBits& answers, int queries, double buffer,
                          DecodeConvention convention = DecodeConvention::kIdentity);

// (from - to) mod n: how far `to` lies below `from` in the cyclic order.
std::size_t cyclic_distance_below(std::size_t from, std::size_t to, std::size_t n);

// round(x * n) used for the buffer and corruption counts.
std::size_t integral_count(double fraction, int queries);

struct Interval {
    double lo = 1.0;  // inclusive
    double hi = 1.0;  // exclusive
};

// For each query i, the union of interruptions in [1, horizon) whose error-free answer is "yes".
std::vector<std::vector<Interval>> partition_sets(const QueryFamily& family, double horizon);

}  // namespace contractsched

#endif  // CONTRACTSCHED_QUERY_PREDICTION_HPP_
