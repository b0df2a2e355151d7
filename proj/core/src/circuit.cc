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

#include "gqnn/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace gqnn {

std::uint64_t QubitRange::mask() const {
    if (width >= 64) {
        throw std::out_of_range("QubitRange::mask: register wider than 64 qubits");
    }
    return ((std::uint64_t{1} << width) - 1) << first;
}

std::string_view gate_base_name(GateBase base) {
    switch (base) {
        case GateBase::X:
            return "X";
        case GateBase::H:
            return "H";
        case GateBase::Z:
            return "Z";
    }
    throw std::invalid_argument("unknown gate base");
}

GateBase parse_gate_base(std::string_view name) {
    if (name == "X") return GateBase::X;
    if (name == "H") return GateBase::H;
    if (name == "Z") return GateBase::Z;
    throw std::invalid_argument("unknown gate base '" + std::string(name) + "'");
}

Gate::Gate(GateBase base, std::vector<Qubit> controls, Qubit target)
    : base(base), controls(std::move(controls)), target(target) {
    std::sort(this->controls.begin(), this->controls.end());
    if (std::adjacent_find(this->controls.begin(), this->controls.end()) != this->controls.end()) {
        throw std::invalid_argument("Gate: duplicate control qubit");
    }
    if (std::binary_search(this->controls.begin(), this->controls.end(), target)) {
        throw std::invalid_argument("Gate: target qubit " + std::to_string(target) + " is also a control");
    }
}

Qubit Gate::max_qubit() const {
    return controls.empty() ? target : std::max(target, controls.back());
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

void Circuit::check_gate(const Gate &gate) const {
    if (gate.max_qubit() >= num_qubits_) {
        throw std::out_of_range("Circuit: gate touches qubit " + std::to_string(gate.max_qubit()) +
                                " but the circuit has " + std::to_string(num_qubits_) + " qubits");
    }
}

Circuit &Circuit::add(Gate gate) {
    check_gate(gate);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("Circuit::append: appended circuit has " + std::to_string(other.num_qubits_) +
                                    " qubits, more than " + std::to_string(num_qubits_));
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    labels_.insert(labels_.end(), other.labels_.begin(), other.labels_.end());
    return *this;
}

Circuit &Circuit::label(QubitRange range, std::string text) {
    if (range.end() > num_qubits_) {
        throw std::out_of_range("Circuit::label: range exceeds circuit width");
    }
    labels_.push_back({range, std::move(text)});
    return *this;
}

Circuit Circuit::controlled_by(std::vector<Qubit> extra) const {
    Circuit result(num_qubits_);
    result.labels_ = labels_;
    for (const Gate &g : gates_) {
        std::vector<Qubit> controls = g.controls;
        controls.insert(controls.end(), extra.begin(), extra.end());
        result.add(Gate(g.base, std::move(controls), g.target));
    }
    return result;
}

Circuit inverse(const Circuit &circuit) {
    Circuit result(circuit.num_qubits());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        result.add(*it);
    }
    for (const CircuitLabel &l : circuit.labels()) {
        result.label(l.range, l.text);
    }
    return result;
}

void encode_basis(Circuit &circuit, QubitRange reg, std::uint64_t value) {
    if (reg.width < 64 && (value >> reg.width) != 0) {
        throw std::invalid_argument("encode_basis: value " + std::to_string(value) + " does not fit in " +
                                    std::to_string(reg.width) + " qubits");
    }
    for (std::size_t j = 0; j < reg.width; ++j) {
        if ((value >> j) & 1U) {
            circuit.x(reg[j]);
        }
    }
}

}  // namespace gqnn
