// Copyright 2026 The qcbp Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qcbp {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation produces a non-finite value.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string &what,
                          std::optional<std::size_t> iteration = std::nullopt)
        : std::runtime_error(what), iteration_(iteration) {}

    /// Training iteration at which the failure happened, if any.
    [[nodiscard]] std::optional<std::size_t> iteration() const noexcept {
        return iteration_;
    }

  private:
    std::optional<std::size_t> iteration_;
};

} // namespace qcbp
