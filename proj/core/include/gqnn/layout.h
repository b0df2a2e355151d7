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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gqnn/circuit.h"

namespace gqnn {

enum class RegisterRole { Input, Weight, Product, Flag, Ancilla };

std::string_view role_name(RegisterRole role);
RegisterRole parse_role(std::string_view name);

struct RegisterEntry {
    RegisterRole role;
    std::string name;
    QubitRange range;

    bool operator==(const RegisterEntry &) const = default;
};

/// Named, pairwise-disjoint qubit ranges. `allocate` hands out ranges
/// back to back, so the union of entries is always [0, num_qubits()).
class RegisterLayout {
   public:
    QubitRange allocate(RegisterRole role, std::string name, std::size_t width);

    /// Adds an entry at an explicit position (used when importing). Throws on
    /// overlap or duplicate name.
    void insert(RegisterEntry entry);

    const std::vector<RegisterEntry> &entries() const { return entries_; }
    std::size_t num_qubits() const;

    const RegisterEntry *find(std::string_view name) const;
    /// Throws std::out_of_range when `name` is absent.
    const RegisterEntry &at(std::string_view name) const;
    std::vector<QubitRange> ranges(RegisterRole role) const;

    /// Checks pairwise disjointness and that the entries tile [0, num_qubits()).
    void validate() const;

    bool operator==(const RegisterLayout &) const = default;

   private:
    std::vector<RegisterEntry> entries_;
    std::size_t next_ = 0;
};

}  // namespace gqnn
