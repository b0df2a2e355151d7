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

#include "gqnn/qnn.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace gqnn;

namespace {

NetworkSpec example_net() {
    NetworkSpec net;
    net.synapses.push_back({"i1", "h1", "w1", 3, 2, 4});
    return net;
}

Dataset example_data() { return {{{{"i1", 3}}, {{"h1", 6}}}}; }

}  // namespace

TEST(circuit_json, round_trip_is_gate_identical) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Circuit c = oracle::random_circuit(seed, 6, 80, 5);
        c.label({0, 2}, "w1");
        const CircuitDocument doc = circuit_from_json(circuit_to_json(c));
        EXPECT_EQ(doc.circuit, c);
    }
}

TEST(circuit_json, round_trip_keeps_layout) {
    const TrainingCircuit tc = build_training_circuit(example_net(), example_data());
    const CircuitDocument doc = circuit_from_json(circuit_to_json(tc.circuit, tc.layout.registers));
    EXPECT_EQ(doc.circuit, tc.circuit);
    ASSERT_EQ(doc.layout.entries().size(), tc.layout.registers.entries().size());
    EXPECT_EQ(doc.layout.at("w1").range, tc.layout.registers.at("w1").range);
    EXPECT_EQ(doc.layout.at("w1").role, RegisterRole::Weight);
}

TEST(circuit_json, imported_training_circuit_finds_weight) {
    const TrainingCircuit tc = build_training_circuit(example_net(), example_data());
    const CircuitDocument doc = circuit_from_json(circuit_to_json(tc.circuit, tc.layout.registers));
    const std::vector<double> p = probabilities(simulate(doc.circuit), doc.layout.at("w1").range);
    EXPECT_NEAR(p[2], 1.0, 1e-9);
}

TEST(circuit_json, rejects_malformed_documents) {
    EXPECT_THROW(circuit_from_json("not json"), std::invalid_argument);
    EXPECT_THROW(circuit_from_json("{}"), std::invalid_argument);
    EXPECT_THROW(circuit_from_json(R"({"format":"other","version":1,"num_qubits":2,"gates":[]})"),
                 std::invalid_argument);
    EXPECT_THROW(circuit_from_json(
                     R"({"format":"gqnn-circuit","version":1,"num_qubits":2,"gates":[{"base":"Y","controls":[],"target":0}]})"),
                 std::invalid_argument);
    EXPECT_THROW(circuit_from_json(
                     R"({"format":"gqnn-circuit","version":1,"num_qubits":2,"gates":[{"base":"X","controls":[1],"target":1}]})"),
                 std::invalid_argument);
    EXPECT_THROW(circuit_from_json(
                     R"({"format":"gqnn-circuit","version":1,"num_qubits":2,"gates":[{"base":"X","controls":[],"target":2}]})"),
                 std::invalid_argument);
}

TEST(circuit_qasm, header_and_registers) {
    Circuit c(3);
    c.h(0).cx(0, 1).ccx(0, 1, 2);
    const std::string text = circuit_to_qasm(c);
    EXPECT_TRUE(text.starts_with("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"));
    EXPECT_NE(text.find("qreg q[3];"), std::string::npos);
    EXPECT_EQ(text.find("qreg anc"), std::string::npos);
    EXPECT_EQ(qasm_ancillas(c), 0u);
}

// Every exported gate has at most two controls, and the replayed program,
// run on |0...0>, matches the source circuit on the data qubits with the
// decomposition ancillas returned to |0>.
TEST(circuit_qasm, replay_matches_simulation) {
    std::vector<Circuit> circuits;
    for (std::uint64_t seed = 0; seed < 8; ++seed) circuits.push_back(oracle::random_circuit(seed, 7, 60, 6));
    circuits.push_back(build_training_circuit(example_net(), example_data()).circuit);
    for (const Circuit &c : circuits) {
        const oracle::QasmProgram prog = oracle::replay_qasm(circuit_to_qasm(c));
        EXPECT_LE(prog.max_controls, 2u);
        ASSERT_EQ(prog.data_qubits, c.num_qubits());
        EXPECT_EQ(prog.ancillas, qasm_ancillas(c));
        const QuantumState want = simulate(c);
        const QuantumState got = simulate(prog.circuit);
        const std::vector<QubitRange> data = {{0, c.num_qubits()}};
        EXPECT_NEAR(probability_zero_outside(got, data), 1.0, 1e-9);
        double worst = 0.0;
        for (std::uint64_t i = 0; i < want.dimension(); ++i) worst = std::max(worst, std::abs(want[i] - got[i]));
        EXPECT_LT(worst, 1e-9);
    }
}
