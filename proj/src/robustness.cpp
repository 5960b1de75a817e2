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

#include "contractsched/robustness.hpp"

#include <cmath>

#include <fmt/core.h>

#include "contractsched/errors.hpp"

namespace contractsched {

RobustnessParams cr_br(double r) {
    if (!(r >= 4.0) || !std::isfinite(r))
        throw DomainError(fmt::format("robustness {} is below the optimum 4", r));
    const double root = std::sqrt(r * r - 4.0 * r);
    return {r, (r - root) / 2.0, (r + root) / 2.0};
}

double exponential_robustness(double base) {
    if (!(base > 1.0)) throw DomainError(fmt::format("exponential base {} must exceed 1", base));
    return base * base / (base - 1.0);
}

}  // namespace contractsched
