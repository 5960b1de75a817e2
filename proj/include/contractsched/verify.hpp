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

#ifndef CONTRACTSCHED_VERIFY_HPP_
#define CONTRACTSCHED_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace contractsched {

struct SuiteResult {
    std::string module;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    int jobs = 1;
};

// Runs every property suite of every module plus the lower-bound corroboration.
std::vector<SuiteResult> run_invariant_suites(const VerifyOptions& options = {});

}  // namespace contractsched

#endif  // CONTRACTSCHED_VERIFY_HPP_
