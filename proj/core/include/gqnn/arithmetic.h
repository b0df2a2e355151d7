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

/**
 * @file
 * Reversible arithmetic synthesis: controlled addition, shift-and-add
 * multiplication, equality against a classical constant and conjunction of
 * flag qubits.
 *
 * All contracts are stated on computational basis states. Every synthesizer
 * leaves its ancillas in |0> and its input registers unchanged.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gqnn/circuit.h"

namespace gqnn {

enum class AdderKind {
    /// Cuccaro-style MAJ/UMA ripple-carry adder with one carry ancilla; the
    /// addend is zero-padded with ancillas up to the target width.
    RippleCarry,
    /// One controlled increment per addend bit, built from multi-controlled X.
    /// Needs no ancillas.
    Increment,
};

/// Ancillas needed by `build_controlled_add` for these widths.
std::size_t adder_ancillas(std::size_t addend_width, std::size_t target_width, AdderKind kind);

/// |addend=x, target=t> -> |x, (t + x) mod 2^len(target)> when every qubit in
/// `controls` is 1, identity otherwise.
Circuit build_controlled_add(std::size_t num_qubits, QubitRange addend, QubitRange target,
                             std::span<const Qubit> controls, QubitRange ancilla, AdderKind kind);

/// Ancillas needed by `build_multiplier` for these widths.
std::size_t multiplier_ancillas(std::size_t a_width, std::size_t b_width, std::size_t p_width, AdderKind kind);

/// Shift-and-add multiplier: |a=x, b=y, p=0> -> |x, y, x*y mod 2^len(p)>.
/// For each bit j of b, a shifted left by j is added into p under control of
/// b[j]. `ancilla` must hold at least multiplier_ancillas(...) qubits.
Circuit build_multiplier(std::size_t num_qubits, QubitRange a, QubitRange b, QubitRange p, QubitRange ancilla = {},
                         AdderKind kind = AdderKind::RippleCarry);

/// Flips `flag` exactly when `reg` holds `constant`; `reg` is left unchanged.
Circuit build_constant_equality(std::size_t num_qubits, QubitRange reg, std::uint64_t constant, Qubit flag);

enum class FlagMode {
    /// Multiply the amplitude by -1 where every flag is 1.
    Phase,
    /// Flip a separate target qubit where every flag is 1.
    BitFlip,
};

/// Conjunction of `flags`. `target` is required in BitFlip mode and ignored
/// in Phase mode.
Circuit build_and_flag(std::size_t num_qubits, std::span<const Qubit> flags, FlagMode mode,
                       std::optional<Qubit> target = std::nullopt);

}  // namespace gqnn
