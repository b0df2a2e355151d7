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
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gqnn {

using Qubit = std::size_t;

/// Contiguous run of qubits. Qubit `first + j` carries bit j of the register
/// value (little-endian).
struct QubitRange {
    Qubit first = 0;
    std::size_t width = 0;

    Qubit operator[](std::size_t j) const { return first + j; }
    Qubit end() const { return first + width; }
    bool empty() const { return width == 0; }
    bool contains(Qubit q) const { return q >= first && q < end(); }
    bool overlaps(const QubitRange &other) const {
        return !empty() && !other.empty() && first < other.end() && other.first < end();
    }
    std::uint64_t mask() const;

    bool operator==(const QubitRange &) const = default;
};

enum class GateBase : std::uint8_t { X, H, Z };

std::string_view gate_base_name(GateBase base);
GateBase parse_gate_base(std::string_view name);

/// A primitive gate: `base` acting on `target`, conditioned on every qubit in
/// `controls` being 1. Controls are kept sorted and unique.
struct Gate {
    GateBase base = GateBase::X;
    std::vector<Qubit> controls;
    Qubit target = 0;

    Gate() = default;
    Gate(GateBase base, std::vector<Qubit> controls, Qubit target);

    /// Largest qubit index touched by the gate.
    Qubit max_qubit() const;

    bool operator==(const Gate &) const = default;
};

struct CircuitLabel {
    QubitRange range;
    std::string text;

    bool operator==(const CircuitLabel &) const = default;
};

/// Ordered gate list over a fixed number of qubits. Labels are annotations
/// only and never change what the circuit does.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<CircuitLabel> &labels() const { return labels_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    Circuit &add(Gate gate);
    Circuit &x(Qubit target) { return add(Gate(GateBase::X, {}, target)); }
    Circuit &h(Qubit target) { return add(Gate(GateBase::H, {}, target)); }
    Circuit &z(Qubit target) { return add(Gate(GateBase::Z, {}, target)); }
    Circuit &cx(Qubit control, Qubit target) { return add(Gate(GateBase::X, {control}, target)); }
    Circuit &ccx(Qubit c0, Qubit c1, Qubit target) { return add(Gate(GateBase::X, {c0, c1}, target)); }
    Circuit &mcx(std::vector<Qubit> controls, Qubit target) {
        return add(Gate(GateBase::X, std::move(controls), target));
    }
    Circuit &mcz(std::vector<Qubit> controls, Qubit target) {
        return add(Gate(GateBase::Z, std::move(controls), target));
    }

    /// Appends all gates and labels of `other`, which may use fewer qubits.
    Circuit &append(const Circuit &other);
    Circuit &label(QubitRange range, std::string text);

    /// Same circuit with `extra` added to every gate's control set.
    Circuit controlled_by(std::vector<Qubit> extra) const;

    bool operator==(const Circuit &) const = default;

   private:
    void check_gate(const Gate &gate) const;

    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
    std::vector<CircuitLabel> labels_;
};

/// Gates in reverse order. Every gate in the {X, H, Z} family is
/// self-inverse, including its controlled versions.
Circuit inverse(const Circuit &circuit);

/// Appends X on each qubit of `reg` whose bit in `value` is set.
void encode_basis(Circuit &circuit, QubitRange reg, std::uint64_t value);

}  // namespace gqnn
