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
 * Dense state-vector simulation over the {X, H, Z} gate family with
 * arbitrary control sets.
 *
 * Basis index bit k is the value of qubit k. Amplitudes are stored as
 * double-precision complex numbers; global phase is neither tracked nor
 * normalized.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gqnn/circuit.h"

namespace gqnn {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;

class QuantumState {
   public:
    /// |0...0> on `num_qubits` qubits (1..kMaxQubits).
    explicit QuantumState(std::size_t num_qubits);

    /// Computational basis state |basis_index>.
    static QuantumState basis(std::size_t num_qubits, std::uint64_t basis_index);

    /// Takes ownership of `amplitudes`; the length must be a power of two.
    /// No normalization is applied.
    static QuantumState from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    const Amplitude &operator[](std::uint64_t index) const { return amplitudes_[index]; }

    /// Squared L2 norm of the amplitude vector.
    double norm_squared() const;

   private:
    QuantumState() = default;

    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

/// Applies `gate` in place. Only basis indices with every control bit set
/// are touched.
void apply_gate(QuantumState &state, const Gate &gate);

/// Applies the gates of `circuit` in order. Throws if the qubit counts differ.
void apply_circuit(QuantumState &state, const Circuit &circuit);

/// Runs `circuit` on |0...0> and returns the final state.
QuantumState simulate(const Circuit &circuit);

/// Marginal distribution of `reg`: entry v is the probability that the
/// register reads value v.
std::vector<double> probabilities(const QuantumState &state, QubitRange reg);

/// Marginal distribution over an ordered list of registers. The value index
/// concatenates the registers little-endian: regs[0] holds the low bits.
std::vector<double> probabilities(const QuantumState &state, std::span<const QubitRange> regs);

/// Probability that every qubit outside `keep` reads 0.
double probability_zero_outside(const QuantumState &state, std::span<const QubitRange> keep);

using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// Draws `shots` values of `reg` from its marginal distribution without
/// collapsing the state.
///
/// The generator is std::mt19937_64 seeded with `seed`; each shot consumes one
/// 64-bit output, mapped to a double in [0, 1) by its top 53 bits and
/// resolved by inverse-CDF lookup. Results are bit-reproducible across
/// platforms for a given seed, state and shot count.
Histogram sample(const QuantumState &state, QubitRange reg, std::uint64_t shots, std::uint64_t seed);

/// Same as above for a distribution that has already been computed.
Histogram sample_distribution(std::span<const double> distribution, std::uint64_t shots, std::uint64_t seed);

}  // namespace gqnn
