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

#include "gqnn/circuit_io.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gqnn {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "gqnn-circuit";
constexpr int kVersion = 1;

std::size_t ancillas_for(const Gate &g) {
    const std::size_t c = g.controls.size();
    switch (g.base) {
        case GateBase::X:
        case GateBase::Z:
            return c >= 3 ? c - 2 : 0;
        case GateBase::H:
            return c >= 2 ? c - 1 : 0;
    }
    return 0;
}

class QasmWriter {
   public:
    QasmWriter(std::ostream &out, std::size_t num_qubits) : out_(out), num_qubits_(num_qubits) {}

    void gate(const Gate &g) {
        const std::vector<Qubit> &c = g.controls;
        switch (g.base) {
            case GateBase::X:
                if (c.size() <= 2) {
                    emit(c.empty() ? "x" : c.size() == 1 ? "cx" : "ccx", c, g.target);
                } else {
                    // AND of all but the last control into the chain, one
                    // Toffoli onto the target, then unwind the chain.
                    const std::vector<Qubit> head(c.begin(), c.end() - 1);
                    const Qubit top = and_chain(head);
                    emit("ccx", {c.back(), top}, g.target);
                    unwind(head);
                }
                break;
            case GateBase::Z:
                if (c.size() <= 1) {
                    emit(c.empty() ? "z" : "cz", c, g.target);
                } else {
                    emit("h", {}, g.target);
                    gate(Gate(GateBase::X, c, g.target));
                    emit("h", {}, g.target);
                }
                break;
            case GateBase::H:
                if (c.size() <= 1) {
                    emit(c.empty() ? "h" : "ch", c, g.target);
                } else {
                    const Qubit top = and_chain(c);
                    emit("ch", {top}, g.target);
                    unwind(c);
                }
                break;
        }
    }

   private:
    // Computes the AND of `controls` (at least two) into ancillas and returns
    // the ancilla holding the result.
    Qubit and_chain(const std::vector<Qubit> &controls) {
        Qubit acc = anc(0);
        emit("ccx", {controls[0], controls[1]}, acc);
        for (std::size_t i = 2; i < controls.size(); ++i) {
            emit("ccx", {controls[i], acc}, anc(i - 1));
            acc = anc(i - 1);
        }
        return acc;
    }

    void unwind(const std::vector<Qubit> &controls) {
        for (std::size_t i = controls.size(); i-- > 2;) {
            emit("ccx", {controls[i], anc(i - 2)}, anc(i - 1));
        }
        emit("ccx", {controls[0], controls[1]}, anc(0));
    }

    Qubit anc(std::size_t j) const { return num_qubits_ + j; }

    std::string name(Qubit q) const {
        return q < num_qubits_ ? "q[" + std::to_string(q) + "]" : "anc[" + std::to_string(q - num_qubits_) + "]";
    }

    void emit(std::string_view op, const std::vector<Qubit> &controls, Qubit target) {
        out_ << op << ' ';
        for (Qubit c : controls) out_ << name(c) << ',';
        out_ << name(target) << ";\n";
    }

    std::ostream &out_;
    std::size_t num_qubits_;
};

template <typename T>
T get_field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(where + ": missing field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(where + "." + key + ": " + e.what());
    }
}

}  // namespace

std::string circuit_to_json(const Circuit &circuit, const RegisterLayout &layout) {
    json doc;
    doc["format"] = kFormat;
    doc["version"] = kVersion;
    doc["num_qubits"] = circuit.num_qubits();
    json registers = json::array();
    for (const RegisterEntry &e : layout.entries()) {
        registers.push_back(
            {{"role", role_name(e.role)}, {"name", e.name}, {"first", e.range.first}, {"width", e.range.width}});
    }
    doc["registers"] = std::move(registers);
    json labels = json::array();
    for (const CircuitLabel &l : circuit.labels()) {
        labels.push_back({{"first", l.range.first}, {"width", l.range.width}, {"text", l.text}});
    }
    doc["labels"] = std::move(labels);
    json gates = json::array();
    for (const Gate &g : circuit.gates()) {
        gates.push_back({{"base", gate_base_name(g.base)}, {"controls", g.controls}, {"target", g.target}});
    }
    doc["gates"] = std::move(gates);
    return doc.dump(1) + "\n";
}

CircuitDocument circuit_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("circuit json: ") + e.what());
    }
    if (get_field<std::string>(doc, "format", "circuit") != kFormat) {
        throw std::invalid_argument("circuit.format: expected '" + std::string(kFormat) + "'");
    }
    if (get_field<int>(doc, "version", "circuit") != kVersion) {
        throw std::invalid_argument("circuit.version: unsupported version");
    }
    CircuitDocument out;
    out.circuit = Circuit(get_field<std::size_t>(doc, "num_qubits", "circuit"));

    const json registers = doc.value("registers", json::array());
    for (std::size_t i = 0; i < registers.size(); ++i) {
        const std::string at = "circuit.registers[" + std::to_string(i) + "]";
        out.layout.insert({parse_role(get_field<std::string>(registers[i], "role", at)),
                           get_field<std::string>(registers[i], "name", at),
                           QubitRange{get_field<std::size_t>(registers[i], "first", at),
                                      get_field<std::size_t>(registers[i], "width", at)}});
    }
    if (out.layout.num_qubits() > out.circuit.num_qubits()) {
        throw std::invalid_argument("circuit.registers: layout exceeds num_qubits");
    }

    const json gates = get_field<json>(doc, "gates", "circuit");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const std::string at = "circuit.gates[" + std::to_string(i) + "]";
        try {
            out.circuit.add(Gate(parse_gate_base(get_field<std::string>(gates[i], "base", at)),
                                 get_field<std::vector<Qubit>>(gates[i], "controls", at),
                                 get_field<Qubit>(gates[i], "target", at)));
        } catch (const std::logic_error &e) {
            throw std::invalid_argument(at + ": " + e.what());
        }
    }

    const json labels = doc.value("labels", json::array());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const std::string at = "circuit.labels[" + std::to_string(i) + "]";
        try {
            out.circuit.label(QubitRange{get_field<std::size_t>(labels[i], "first", at),
                                         get_field<std::size_t>(labels[i], "width", at)},
                              get_field<std::string>(labels[i], "text", at));
        } catch (const std::out_of_range &e) {
            throw std::invalid_argument(at + ": " + e.what());
        }
    }
    return out;
}

std::size_t qasm_ancillas(const Circuit &circuit) {
    std::size_t n = 0;
    for (const Gate &g : circuit.gates()) n = std::max(n, ancillas_for(g));
    return n;
}

std::string circuit_to_qasm(const Circuit &circuit, const RegisterLayout &layout) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    for (const RegisterEntry &e : layout.entries()) {
        out << "// " << role_name(e.role) << ' ' << e.name << ": q[" << e.range.first << ".." << e.range.end() - 1
            << "], little-endian\n";
    }
    out << "qreg q[" << circuit.num_qubits() << "];\n";
    const std::size_t ancillas = qasm_ancillas(circuit);
    if (ancillas > 0) {
        out << "qreg anc[" << ancillas << "];\n";
    }
    QasmWriter writer(out, circuit.num_qubits());
    for (const Gate &g : circuit.gates()) writer.gate(g);
    return out.str();
}

}  // namespace gqnn
