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

#include "gqnn/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace gqnn {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_num_qubits(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw std::out_of_range("QuantumState: qubit count " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxQubits));
    }
}

// Gathers the bits of `index` selected by `regs` into a packed value.
std::uint64_t extract(std::uint64_t index, std::span<const QubitRange> regs) {
    std::uint64_t value = 0;
    std::size_t shift = 0;
    for (const QubitRange &r : regs) {
        value |= ((index >> r.first) & ((std::uint64_t{1} << r.width) - 1)) << shift;
        shift += r.width;
    }
    return value;
}

}  // namespace

QuantumState::QuantumState(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_num_qubits(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

QuantumState QuantumState::basis(std::size_t num_qubits, std::uint64_t basis_index) {
    QuantumState s(num_qubits);
    if (basis_index >= s.dimension()) {
        throw std::out_of_range("QuantumState::basis: index " + std::to_string(basis_index) + " out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[basis_index] = 1.0;
    return s;
}

QuantumState QuantumState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("QuantumState::from_amplitudes: length must be a power of two");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    check_num_qubits(n);
    QuantumState s;
    s.num_qubits_ = n;
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double QuantumState::norm_squared() const {
    double total = 0.0;
    for (const Amplitude &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void apply_gate(QuantumState &state, const Gate &gate) {
    if (gate.max_qubit() >= state.num_qubits()) {
        throw std::out_of_range("apply_gate: gate touches qubit " + std::to_string(gate.max_qubit()) +
                                " of a " + std::to_string(state.num_qubits()) + "-qubit state");
    }
    std::uint64_t control_mask = 0;
    for (Qubit c : gate.controls) {
        control_mask |= std::uint64_t{1} << c;
    }
    const std::uint64_t target_bit = std::uint64_t{1} << gate.target;
    const std::uint64_t low_mask = target_bit - 1;
    const std::uint64_t half = state.dimension() / 2;
    std::span<Amplitude> amp = state.amplitudes();

    // k enumerates indices with the target bit cleared.
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = ((k & ~low_mask) << 1) | (k & low_mask);
        if ((i0 & control_mask) != control_mask) {
            continue;
        }
        const std::uint64_t i1 = i0 | target_bit;
        switch (gate.base) {
            case GateBase::X:
                std::swap(amp[i0], amp[i1]);
                break;
            case GateBase::Z:
                amp[i1] = -amp[i1];
                break;
            case GateBase::H: {
                const Amplitude a = amp[i0];
                const Amplitude b = amp[i1];
                amp[i0] = (a + b) * kInvSqrt2;
                amp[i1] = (a - b) * kInvSqrt2;
                break;
            }
        }
    }
}

void apply_circuit(QuantumState &state, const Circuit &circuit) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("apply_circuit: circuit has " + std::to_string(circuit.num_qubits()) +
                                    " qubits, state has " + std::to_string(state.num_qubits()));
    }
    for (const Gate &g : circuit.gates()) {
        apply_gate(state, g);
    }
}

QuantumState simulate(const Circuit &circuit) {
    QuantumState state(circuit.num_qubits());
    apply_circuit(state, circuit);
    return state;
}

std::vector<double> probabilities(const QuantumState &state, std::span<const QubitRange> regs) {
    std::size_t width = 0;
    for (const QubitRange &r : regs) {
        if (r.end() > state.num_qubits()) {
            throw std::out_of_range("probabilities: register exceeds state width");
        }
        width += r.width;
    }
    std::vector<double> dist(std::size_t{1} << width, 0.0);
    std::span<const Amplitude> amp = state.amplitudes();
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        dist[extract(i, regs)] += std::norm(amp[i]);
    }
    return dist;
}

std::vector<double> probabilities(const QuantumState &state, QubitRange reg) {
    return probabilities(state, std::span<const QubitRange>(&reg, 1));
}

double probability_zero_outside(const QuantumState &state, std::span<const QubitRange> keep) {
    std::uint64_t keep_mask = 0;
    for (const QubitRange &r : keep) {
        keep_mask |= r.mask();
    }
    double total = 0.0;
    std::span<const Amplitude> amp = state.amplitudes();
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if ((i & ~keep_mask) == 0) {
            total += std::norm(amp[i]);
        }
    }
    return total;
}

Histogram sample_distribution(std::span<const double> distribution, std::uint64_t shots, std::uint64_t seed) {
    if (distribution.empty()) {
        throw std::invalid_argument("sample: empty distribution");
    }
    if (shots == 0) {
        throw std::invalid_argument("sample: shots must be at least 1");
    }
    std::vector<double> cdf(distribution.size());
    double running = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t v = 0; v < distribution.size(); ++v) {
        running += distribution[v];
        cdf[v] = running;
        if (distribution[v] > 0.0) {
            last_nonzero = v;
        }
    }
    std::mt19937_64 engine(seed);
    Histogram histogram;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u * running);
        const auto value = std::min(static_cast<std::size_t>(it - cdf.begin()), last_nonzero);
        ++histogram[value];
    }
    return histogram;
}

Histogram sample(const QuantumState &state, QubitRange reg, std::uint64_t shots, std::uint64_t seed) {
    const std::vector<double> dist = probabilities(state, reg);
    return sample_distribution(dist, shots, seed);
}

}  // namespace gqnn
