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

// Test-only oracles. Nothing here calls into the simulator or the circuit
// synthesizers it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqnn/circuit.h"
#include "gqnn/state.h"

namespace gqnn::oracle {

/// Grover on a bare amplitude vector: start uniform, negate the marked
/// entries, reflect about the mean (a -> 2 * mean - a).
inline std::vector<double> reference_grover(std::size_t search_space, const std::vector<bool> &marked,
                                            std::uint64_t iterations) {
    std::vector<double> a(search_space, 1.0 / std::sqrt(static_cast<double>(search_space)));
    for (std::uint64_t k = 0; k < iterations; ++k) {
        for (std::size_t v = 0; v < search_space; ++v) {
            if (marked[v]) a[v] = -a[v];
        }
        double mean = 0.0;
        for (double x : a) mean += x;
        mean /= static_cast<double>(search_space);
        for (double &x : a) x = 2.0 * mean - x;
    }
    return a;
}

inline double reference_marked_probability(std::size_t search_space, const std::vector<bool> &marked,
                                           std::uint64_t iterations) {
    const std::vector<double> a = reference_grover(search_space, marked, iterations);
    double p = 0.0;
    for (std::size_t v = 0; v < search_space; ++v) {
        if (marked[v]) p += a[v] * a[v];
    }
    return p;
}

/// Largest |a_i - e^{i phi} b_i| after aligning global phase on the largest
/// entry of `a`.
inline double max_phase_aligned_diff(const QuantumState &a, const QuantumState &b) {
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i]) > std::abs(a[pivot])) pivot = i;
    }
    std::complex<double> phase = 1.0;
    if (std::abs(b[pivot]) > 1e-12) phase = (a[pivot] / std::abs(a[pivot])) / (b[pivot] / std::abs(b[pivot]));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    return worst;
}

inline double max_abs_diff(const QuantumState &a, const QuantumState &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

/// Random gate over {X, H, Z} with up to `max_controls` controls.
inline Gate random_gate(std::mt19937_64 &rng, std::size_t num_qubits, std::size_t max_controls) {
    std::uniform_int_distribution<std::size_t> pick(0, num_qubits - 1);
    std::uniform_int_distribution<int> base(0, 2);
    std::uniform_int_distribution<std::size_t> ncontrols(0, std::min(max_controls, num_qubits - 1));
    const Qubit target = pick(rng);
    std::vector<Qubit> controls;
    const std::size_t want = ncontrols(rng);
    while (controls.size() < want) {
        const Qubit q = pick(rng);
        if (q != target && std::find(controls.begin(), controls.end(), q) == controls.end()) controls.push_back(q);
    }
    return Gate(static_cast<GateBase>(base(rng)), std::move(controls), target);
}

inline Circuit random_circuit(std::uint64_t seed, std::size_t num_qubits, std::size_t gates,
                              std::size_t max_controls = 3) {
    std::mt19937_64 rng(seed);
    Circuit c(num_qubits);
    for (std::size_t i = 0; i < gates; ++i) c.add(random_gate(rng, num_qubits, max_controls));
    return c;
}

/// Replays the OpenQASM 2.0 subset emitted by the exporter: qreg q/anc,
/// x h z cx cz ch ccx. Registers are laid out q first, then anc. Also
/// reports the largest control count seen.
struct QasmProgram {
    Circuit circuit;
    std::size_t data_qubits = 0;
    std::size_t ancillas = 0;
    std::size_t max_controls = 0;
};

inline QasmProgram replay_qasm(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    QasmProgram prog;
    std::vector<std::pair<std::string, std::vector<std::string>>> ops;
    while (std::getline(in, line)) {
        if (line.empty() || line.starts_with("//") || line.starts_with("OPENQASM") || line.starts_with("include")) {
            continue;
        }
        if (line.starts_with("qreg ")) {
            const auto open = line.find('[');
            const std::string name = line.substr(5, open - 5);
            const std::size_t size = std::stoul(line.substr(open + 1));
            if (name == "q") {
                prog.data_qubits = size;
            } else if (name == "anc") {
                prog.ancillas = size;
            } else {
                throw std::runtime_error("unexpected register " + name);
            }
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string::npos || line.back() != ';') throw std::runtime_error("bad line: " + line);
        std::vector<std::string> args;
        std::string rest = line.substr(space + 1, line.size() - space - 2);
        std::istringstream parts(rest);
        std::string arg;
        while (std::getline(parts, arg, ',')) args.push_back(arg);
        ops.emplace_back(line.substr(0, space), std::move(args));
    }
    prog.circuit = Circuit(prog.data_qubits + prog.ancillas);
    auto qubit = [&](const std::string &ref) -> Qubit {
        const auto open = ref.find('[');
        const std::string reg = ref.substr(0, open);
        const std::size_t idx = std::stoul(ref.substr(open + 1));
        if (reg == "q" && idx < prog.data_qubits) return idx;
        if (reg == "anc" && idx < prog.ancillas) return prog.data_qubits + idx;
        throw std::runtime_error("bad qubit reference " + ref);
    };
    for (const auto &[op, args] : ops) {
        std::vector<Qubit> qs;
        for (const std::string &a : args) qs.push_back(qubit(a));
        const Qubit target = qs.back();
        qs.pop_back();
        GateBase base;
        std::size_t expected_controls;
        if (op == "x") {
            base = GateBase::X, expected_controls = 0;
        } else if (op == "h") {
            base = GateBase::H, expected_controls = 0;
        } else if (op == "z") {
            base = GateBase::Z, expected_controls = 0;
        } else if (op == "cx") {
            base = GateBase::X, expected_controls = 1;
        } else if (op == "cz") {
            base = GateBase::Z, expected_controls = 1;
        } else if (op == "ch") {
            base = GateBase::H, expected_controls = 1;
        } else if (op == "ccx") {
            base = GateBase::X, expected_controls = 2;
        } else {
            throw std::runtime_error("unsupported gate " + op);
        }
        if (qs.size() != expected_controls) throw std::runtime_error("wrong arity for " + op);
        prog.max_controls = std::max(prog.max_controls, qs.size());
        prog.circuit.add(Gate(base, std::move(qs), target));
    }
    return prog;
}

}  // namespace gqnn::oracle
