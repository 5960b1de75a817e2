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

#ifndef CONTRACTSCHED_ROBUSTNESS_HPP_
#define CONTRACTSCHED_ROBUSTNESS_HPP_

namespace contractsched {

// Target robustness r and the two roots of x^2 - r x + r = 0.
//
// Exponential schedules with base in [consistency, base] are r-robust; `base` is also the
// base of the consistency-optimal schedule and `consistency` the best consistency an
// r-robust schedule can have.
struct RobustnessParams {
    double r = 4.0;
    double consistency = 2.0;  // (r - sqrt(r^2 - 4r)) / 2
    double base = 2.0;         // (r + sqrt(r^2 - 4r)) / 2
};

// Throws DomainError for r < 4.
RobustnessParams cr_br(double r);

// Worst-case acceleration ratio a^2 / (a - 1) of the schedule (a^i). Throws for a <= 1.
double exponential_robustness(double base);

}  // namespace contractsched

#endif  // CONTRACTSCHED_ROBUSTNESS_HPP_
