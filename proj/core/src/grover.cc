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

#include "gqnn/grover.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gqnn/arithmetic.h"
#include "gqnn/errors.h"

namespace gqnn {

namespace {

std::vector<Qubit> flatten(std::span<const QubitRange> regs) {
    std::vector<Qubit> out;
    for (const QubitRange &r : regs) {
        for (std::size_t j = 0; j < r.width; ++j) out.push_back(r[j]);
    }
    return out;
}

}  // namespace

std::uint64_t grover_iterations(std::uint64_t search_space, std::uint64_t solutions) {
    if (solutions == 0) {
        throw NoSolutionError("grover_iterations: no marked values, nothing to amplify");
    }
    if (solutions > search_space) {
        throw std::invalid_argument("grover_iterations: " + std::to_string(solutions) + " solutions exceed a search space of " +
                                    std::to_string(search_space));
    }
    const double theta = std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(search_space)));
    const double k = std::round(std::numbers::pi / (4.0 * theta) - 0.5);
    return k > 0.0 ? static_cast<std::uint64_t>(k) : 0;
}

GroverPlan make_plan(std::vector<QubitRange> search, std::uint64_t solutions, std::optional<std::uint64_t> iterations) {
    std::size_t bits = 0;
    for (const QubitRange &r : search) bits += r.width;
    if (bits == 0 || bits >= 64) {
        throw std::invalid_argument("make_plan: search register must hold 1..63 qubits");
    }
    GroverPlan plan;
    plan.search = std::move(search);
    plan.search_space = std::uint64_t{1} << bits;
    plan.solutions = solutions;
    const std::uint64_t scheduled = grover_iterations(plan.search_space, solutions);
    plan.iterations = iterations.value_or(scheduled);
    return plan;
}

double marked_probability_law(std::uint64_t search_space, std::uint64_t solutions, std::uint64_t iterations) {
    const double theta = std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(search_space)));
    const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

Circuit build_uniform_init(std::size_t num_qubits, std::span<const QubitRange> search) {
    Circuit c(num_qubits);
    for (Qubit q : flatten(search)) c.h(q);
    return c;
}

Circuit build_diffusion(std::size_t num_qubits, std::span<const QubitRange> search) {
    const std::vector<Qubit> qubits = flatten(search);
    if (qubits.empty()) {
        throw std::invalid_argument("build_diffusion: empty search register");
    }
    Circuit c(num_qubits);
    for (Qubit q : qubits) c.h(q);
    for (Qubit q : qubits) c.x(q);
    c.mcz(std::vector<Qubit>(qubits.begin(), qubits.end() - 1), qubits.back());
    for (Qubit q : qubits) c.x(q);
    for (Qubit q : qubits) c.h(q);
    // The block above is I - 2|s><s|; Z X Z X = -I flips it to 2|s><s| - I.
    c.x(qubits.front()).z(qubits.front()).x(qubits.front()).z(qubits.front());
    return c;
}

Circuit build_oracle(const Circuit &compute, std::span<const Qubit> flags) {
    Circuit c(compute.num_qubits());
    c.append(compute);
    c.append(build_and_flag(compute.num_qubits(), flags, FlagMode::Phase));
    c.append(inverse(compute));
    return c;
}

Circuit build_phase_oracle(std::size_t num_qubits, std::span<const QubitRange> search,
                           std::span<const std::uint64_t> marked) {
    const std::vector<Qubit> qubits = flatten(search);
    if (qubits.empty()) {
        throw std::invalid_argument("build_phase_oracle: empty search register");
    }
    Circuit c(num_qubits);
    for (std::uint64_t value : marked) {
        if (qubits.size() < 64 && (value >> qubits.size()) != 0) {
            throw std::invalid_argument("build_phase_oracle: value " + std::to_string(value) + " out of range");
        }
        Circuit zeros(num_qubits);
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if (((value >> j) & 1U) == 0) zeros.x(qubits[j]);
        }
        c.append(zeros);
        c.mcz(std::vector<Qubit>(qubits.begin(), qubits.end() - 1), qubits.back());
        c.append(zeros);
    }
    return c;
}

void run_grover(QuantumState &state, const Circuit &oracle, const Circuit &diffusion, std::uint64_t iterations) {
    for (std::uint64_t i = 0; i < iterations; ++i) {
        apply_circuit(state, oracle);
        apply_circuit(state, diffusion);
    }
}

double marked_probability(const QuantumState &state, std::span<const QubitRange> search,
                          const std::vector<bool> &marked) {
    const std::vector<double> dist = probabilities(state, search);
    if (marked.size() != dist.size()) {
        throw std::invalid_argument("marked_probability: mask size does not match the search space");
    }
    double total = 0.0;
    for (std::size_t v = 0; v < dist.size(); ++v) {
        if (marked[v]) total += dist[v];
    }
    return total;
}

}  // namespace gqnn
