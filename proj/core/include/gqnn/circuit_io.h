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
#include <string>
#include <string_view>

#include "gqnn/circuit.h"
#include "gqnn/layout.h"

namespace gqnn {

struct CircuitDocument {
    Circuit circuit;
    RegisterLayout layout;
};

/// JSON document with the gate list (base, sorted controls, target), labels
/// and the register layout. `circuit_from_json` inverts it exactly.
std::string circuit_to_json(const Circuit &circuit, const RegisterLayout &layout = {});

/// Throws std::invalid_argument on malformed documents.
CircuitDocument circuit_from_json(std::string_view text);

/// Extra qubits the OpenQASM export appends (register `anc`) to decompose
/// gates with more than two controls.
std::size_t qasm_ancillas(const Circuit &circuit);

/// OpenQASM 2.0 over qelib1 gates {x, h, z, cx, cz, ch, ccx}. Multi-controlled
/// gates are decomposed with a Toffoli V-chain on clean ancillas that are
/// returned to |0>. No emitted gate has more than two controls.
std::string circuit_to_qasm(const Circuit &circuit, const RegisterLayout &layout = {});

}  // namespace gqnn
