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

// Brute-force reference implementations used only by the tests. They deliberately avoid
// the closed forms and search shortcuts of the library.
#ifndef CONTRACTSCHED_TESTS_ORACLES_HPP_
#define CONTRACTSCHED_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

// Lengths x_1..x_count produced by a generator (i -> x_i).
inline std::vector<double> lengths(const std::function<double(std::size_t)>& x, std::size_t count) {
    std::vector<double> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(x(i));
    return out;
}

// Running sums, accumulated one contract at a time.
inline std::vector<double> completions(const std::vector<double>& xs) {
    std::vector<double> out;
    double sum = 0.0;
    for (double x : xs) out.push_back(sum += x);
    return out;
}

// Largest contract whose completion is <= t, floored at 1.
inline double largest(const std::vector<double>& xs, double t) {
    double best = 1.0;
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
        if (sum > t * (1.0 + 1e-12)) break;
        best = std::max(best, x);
    }
    return best;
}

inline double ratio(const std::vector<double>& xs, double t) { return t / largest(xs, t); }

// Index (0-based) of the member with the largest completed contract, smallest on ties.
inline std::size_t best_member(const std::vector<std::vector<double>>& members, double t) {
    std::size_t best = 0;
    double value = largest(members[0], t);
    for (std::size_t k = 1; k < members.size(); ++k) {
        const double v = largest(members[k], t);
        if (v > value) {
            value = v;
            best = k;
        }
    }
    return best;
}

}  // namespace oracle

#endif  // CONTRACTSCHED_TESTS_ORACLES_HPP_
