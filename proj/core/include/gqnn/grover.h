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
 * Grover amplitude amplification over a search register made of one or more
 * qubit ranges. Search values index the concatenated ranges little-endian.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gqnn/circuit.h"
#include "gqnn/state.h"

namespace gqnn {

struct GroverPlan {
    std::vector<QubitRange> search;
    std::uint64_t search_space = 0;  // N
    std::uint64_t solutions = 0;     // M
    std::uint64_t iterations = 0;    // k
};

/// round(pi / (4 asin(sqrt(M/N))) - 1/2), clamped at 0. Throws
/// NoSolutionError when M == 0 and std::invalid_argument when M > N.
std::uint64_t grover_iterations(std::uint64_t search_space, std::uint64_t solutions);

/// Plan over `search` with `solutions` marked values; `iterations` overrides
/// the scheduled count.
GroverPlan make_plan(std::vector<QubitRange> search, std::uint64_t solutions,
                     std::optional<std::uint64_t> iterations = std::nullopt);

/// sin^2((2k + 1) asin(sqrt(M/N))).
double marked_probability_law(std::uint64_t search_space, std::uint64_t solutions, std::uint64_t iterations);

/// H on every search qubit.
Circuit build_uniform_init(std::size_t num_qubits, std::span<const QubitRange> search);

/// 2|s><s| - I on the search register, exact including global phase.
Circuit build_diffusion(std::size_t num_qubits, std::span<const QubitRange> search);

/// compute ; multi-controlled Z across `flags` ; inverse(compute). The flags
/// are computed, used as a phase mark and uncomputed.
Circuit build_oracle(const Circuit &compute, std::span<const Qubit> flags);

/// Oracle that negates exactly the listed search values, with no ancillas.
Circuit build_phase_oracle(std::size_t num_qubits, std::span<const QubitRange> search,
                           std::span<const std::uint64_t> marked);

/// Applies (oracle, diffusion) `iterations` times in place.
void run_grover(QuantumState &state, const Circuit &oracle, const Circuit &diffusion, std::uint64_t iterations);

/// Total probability of the search values for which `marked[v]` is true.
double marked_probability(const QuantumState &state, std::span<const QubitRange> search,
                          const std::vector<bool> &marked);

}  // namespace gqnn
