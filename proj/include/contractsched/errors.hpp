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

#ifndef CONTRACTSCHED_ERRORS_HPP_
#define CONTRACTSCHED_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace contractsched {

// Argument outside the mathematical domain of an operation (r < 4, T < 1, ...).
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Request would exceed a configured size cap (family too large, search grid too big).
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment or CLI configuration.
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace contractsched

#endif  // CONTRACTSCHED_ERRORS_HPP_
