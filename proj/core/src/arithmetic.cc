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

#include "gqnn/arithmetic.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gqnn {

namespace {

void require_disjoint(std::initializer_list<QubitRange> regs, const char *what) {
    for (auto i = regs.begin(); i != regs.end(); ++i) {
        for (auto j = std::next(i); j != regs.end(); ++j) {
            if (i->overlaps(*j)) {
                throw std::invalid_argument(std::string(what) + ": registers overlap");
            }
        }
    }
}

void require_outside(std::span<const Qubit> qubits, std::initializer_list<QubitRange> regs, const char *what) {
    for (Qubit q : qubits) {
        for (const QubitRange &r : regs) {
            if (r.contains(q)) {
                throw std::invalid_argument(std::string(what) + ": qubit " + std::to_string(q) +
                                            " lies inside an operand register");
            }
        }
    }
}

std::vector<Qubit> with(std::span<const Qubit> controls, std::initializer_list<Qubit> more) {
    std::vector<Qubit> out(controls.begin(), controls.end());
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

// |r> -> |r + 1 mod 2^width> under `controls`: bit k flips when every lower
// bit is 1, highest bit first so the lower bits are still unmodified.
void append_increment(Circuit &c, QubitRange r, std::span<const Qubit> controls) {
    for (std::size_t k = r.width; k-- > 0;) {
        std::vector<Qubit> ctrl(controls.begin(), controls.end());
        for (std::size_t i = 0; i < k; ++i) ctrl.push_back(r[i]);
        c.mcx(std::move(ctrl), r[k]);
    }
}

// MAJ and UMA blocks of the Cuccaro adder, each gate also conditioned on `ctrl`.
void append_maj(Circuit &c, Qubit x, Qubit y, Qubit z, std::span<const Qubit> ctrl) {
    c.mcx(with(ctrl, {z}), y);
    c.mcx(with(ctrl, {z}), x);
    c.mcx(with(ctrl, {x, y}), z);
}

void append_uma(Circuit &c, Qubit x, Qubit y, Qubit z, std::span<const Qubit> ctrl) {
    c.mcx(with(ctrl, {x, y}), z);
    c.mcx(with(ctrl, {z}), x);
    c.mcx(with(ctrl, {x}), y);
}

}  // namespace

std::size_t adder_ancillas(std::size_t addend_width, std::size_t target_width, AdderKind kind) {
    if (kind == AdderKind::Increment || target_width == 0 || addend_width == 0) {
        return 0;
    }
    return 1 + (target_width > addend_width ? target_width - addend_width : 0);
}

Circuit build_controlled_add(std::size_t num_qubits, QubitRange addend, QubitRange target,
                             std::span<const Qubit> controls, QubitRange ancilla, AdderKind kind) {
    require_disjoint({addend, target, ancilla}, "build_controlled_add");
    require_outside(controls, {addend, target, ancilla}, "build_controlled_add");
    const std::size_t needed = adder_ancillas(addend.width, target.width, kind);
    if (ancilla.width < needed) {
        throw std::invalid_argument("build_controlled_add: needs " + std::to_string(needed) + " ancillas, got " +
                                    std::to_string(ancilla.width));
    }

    Circuit c(num_qubits);
    const std::size_t width = target.width;
    const std::size_t used = std::min(addend.width, width);
    if (width == 0 || used == 0) {
        return c;
    }

    if (kind == AdderKind::Increment) {
        for (std::size_t i = 0; i < used; ++i) {
            std::vector<Qubit> ctrl = with(controls, {addend[i]});
            append_increment(c, QubitRange{target[i], width - i}, ctrl);
        }
        return c;
    }

    // a[i]: addend bit i, or a zero ancilla above the addend width.
    const Qubit carry = ancilla[0];
    auto a = [&](std::size_t i) { return i < used ? addend[i] : ancilla[1 + (i - used)]; };
    for (std::size_t i = 0; i < width; ++i) {
        append_maj(c, i == 0 ? carry : a(i - 1), target[i], a(i), controls);
    }
    for (std::size_t i = width; i-- > 0;) {
        append_uma(c, i == 0 ? carry : a(i - 1), target[i], a(i), controls);
    }
    return c;
}

std::size_t multiplier_ancillas(std::size_t a_width, std::size_t b_width, std::size_t p_width, AdderKind kind) {
    std::size_t needed = 0;
    for (std::size_t j = 0; j < b_width && j < p_width; ++j) {
        needed = std::max(needed, adder_ancillas(a_width, p_width - j, kind));
    }
    return needed;
}

Circuit build_multiplier(std::size_t num_qubits, QubitRange a, QubitRange b, QubitRange p, QubitRange ancilla,
                         AdderKind kind) {
    if (p.width == 0) {
        throw std::invalid_argument("build_multiplier: product register is empty");
    }
    require_disjoint({a, b, p, ancilla}, "build_multiplier");
    const std::size_t needed = multiplier_ancillas(a.width, b.width, p.width, kind);
    if (ancilla.width < needed) {
        throw std::invalid_argument("build_multiplier: needs " + std::to_string(needed) + " ancillas, got " +
                                    std::to_string(ancilla.width));
    }

    Circuit c(num_qubits);
    for (std::size_t j = 0; j < b.width && j < p.width; ++j) {
        const Qubit control = b[j];
        const QubitRange shifted{p[j], p.width - j};
        c.append(build_controlled_add(num_qubits, a, shifted, std::span<const Qubit>(&control, 1), ancilla, kind));
    }
    return c;
}

Circuit build_constant_equality(std::size_t num_qubits, QubitRange reg, std::uint64_t constant, Qubit flag) {
    if (reg.width == 0 || reg.width >= 64 || (constant >> reg.width) != 0) {
        throw std::invalid_argument("build_constant_equality: constant " + std::to_string(constant) +
                                    " does not fit in " + std::to_string(reg.width) + " qubits");
    }
    if (reg.contains(flag)) {
        throw std::invalid_argument("build_constant_equality: flag qubit lies inside the compared register");
    }
    Circuit zeros(num_qubits);
    encode_basis(zeros, reg, ~constant & ((std::uint64_t{1} << reg.width) - 1));

    Circuit c(num_qubits);
    c.append(zeros);
    std::vector<Qubit> controls;
    for (std::size_t j = 0; j < reg.width; ++j) controls.push_back(reg[j]);
    c.mcx(std::move(controls), flag);
    c.append(zeros);
    return c;
}

Circuit build_and_flag(std::size_t num_qubits, std::span<const Qubit> flags, FlagMode mode,
                       std::optional<Qubit> target) {
    if (flags.empty()) {
        throw std::invalid_argument("build_and_flag: no flags given");
    }
    Circuit c(num_qubits);
    if (mode == FlagMode::Phase) {
        // Z is symmetric in its qubits: any flag can serve as the target.
        std::vector<Qubit> controls(flags.begin(), flags.end() - 1);
        c.mcz(std::move(controls), flags.back());
        return c;
    }
    if (!target) {
        throw std::invalid_argument("build_and_flag: bit-flip mode needs a target qubit");
    }
    if (std::find(flags.begin(), flags.end(), *target) != flags.end()) {
        throw std::invalid_argument("build_and_flag: target is one of the flags");
    }
    c.mcx(std::vector<Qubit>(flags.begin(), flags.end()), *target);
    return c;
}

}  // namespace gqnn
