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

#ifndef CONTRACTSCHED_CLI_HPP_
#define CONTRACTSCHED_CLI_HPP_

#include <iosfwd>

namespace contractsched {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: schedule, eval, bounds, experiment, verify. Results go to `out`, the
// resolved configuration (TOML, accepted back through --config) and errors to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv);

}  // namespace contractsched

#endif  // CONTRACTSCHED_CLI_HPP_
