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

#include "gqnn/layout.h"

#include <algorithm>
#include <stdexcept>

namespace gqnn {

std::string_view role_name(RegisterRole role) {
    switch (role) {
        case RegisterRole::Input:
            return "input";
        case RegisterRole::Weight:
            return "weight";
        case RegisterRole::Product:
            return "product";
        case RegisterRole::Flag:
            return "flag";
        case RegisterRole::Ancilla:
            return "ancilla";
    }
    throw std::invalid_argument("unknown register role");
}

RegisterRole parse_role(std::string_view name) {
    for (RegisterRole r : {RegisterRole::Input, RegisterRole::Weight, RegisterRole::Product, RegisterRole::Flag,
                           RegisterRole::Ancilla}) {
        if (role_name(r) == name) return r;
    }
    throw std::invalid_argument("unknown register role '" + std::string(name) + "'");
}

QubitRange RegisterLayout::allocate(RegisterRole role, std::string name, std::size_t width) {
    QubitRange range{next_, width};
    if (width > 0) {
        insert({role, std::move(name), range});
    }
    return range;
}

void RegisterLayout::insert(RegisterEntry entry) {
    if (entry.range.empty()) {
        throw std::invalid_argument("RegisterLayout: register '" + entry.name + "' is empty");
    }
    if (find(entry.name) != nullptr) {
        throw std::invalid_argument("RegisterLayout: duplicate register name '" + entry.name + "'");
    }
    for (const RegisterEntry &e : entries_) {
        if (e.range.overlaps(entry.range)) {
            throw std::invalid_argument("RegisterLayout: register '" + entry.name + "' overlaps '" + e.name + "'");
        }
    }
    next_ = std::max(next_, entry.range.end());
    entries_.push_back(std::move(entry));
}

std::size_t RegisterLayout::num_qubits() const { return next_; }

const RegisterEntry *RegisterLayout::find(std::string_view name) const {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const RegisterEntry &e) { return e.name == name; });
    return it == entries_.end() ? nullptr : &*it;
}

const RegisterEntry &RegisterLayout::at(std::string_view name) const {
    const RegisterEntry *e = find(name);
    if (e == nullptr) {
        throw std::out_of_range("RegisterLayout: no register named '" + std::string(name) + "'");
    }
    return *e;
}

std::vector<QubitRange> RegisterLayout::ranges(RegisterRole role) const {
    std::vector<QubitRange> out;
    for (const RegisterEntry &e : entries_) {
        if (e.role == role) out.push_back(e.range);
    }
    return out;
}

void RegisterLayout::validate() const {
    std::vector<QubitRange> sorted;
    for (const RegisterEntry &e : entries_) sorted.push_back(e.range);
    std::sort(sorted.begin(), sorted.end(), [](const QubitRange &a, const QubitRange &b) { return a.first < b.first; });
    Qubit expected = 0;
    for (const QubitRange &r : sorted) {
        if (r.first != expected) {
            throw std::logic_error("RegisterLayout: registers do not tile the qubit range (gap or overlap at qubit " +
                                   std::to_string(expected) + ")");
        }
        expected = r.end();
    }
    if (expected != next_) {
        throw std::logic_error("RegisterLayout: registers do not cover all qubits");
    }
}

}  // namespace gqnn
