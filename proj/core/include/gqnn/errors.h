// Copyright 2026 The gqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqnn {

/// No search value satisfies the oracle predicate, so Grover iterations
/// cannot be scheduled.
class NoSolutionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The synthesized circuit would need more qubits than the simulator holds.
class QubitBudgetExceeded : public std::runtime_error {
   public:
    QubitBudgetExceeded(std::size_t required, std::size_t limit)
        : std::runtime_error("circuit needs " + std::to_string(required) + " qubits, simulator limit is " +
                             std::to_string(limit)),
          required_(required),
          limit_(limit) {}

    std::size_t required() const { return required_; }
    std::size_t limit() const { return limit_; }

   private:
    std::size_t required_;
    std::size_t limit_;
};

}  // namespace gqnn
