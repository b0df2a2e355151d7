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
 * Perceptron training by amplitude amplification.
 *
 * A network is a set of independent synapses, each multiplying an input
 * neuron by a trainable integer weight into a hidden neuron with identity
 * activation (hidden = input * weight). Training searches the joint weight
 * space with Grover iterations. The oracle marks a weight assignment when,
 * for every training sample, every required hidden value equals the
 * computed product. Products live in fixed-width registers, so the quantum
 * comparison is modulo 2^product_bits; `train` re-checks each candidate at
 * full precision and reports modular-only matches as unverified.
 *
 * Once trained, the same forward circuit is re-run with basis-encoded weights
 * and new inputs for verification and inference.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gqnn/arithmetic.h"
#include "gqnn/circuit.h"
#include "gqnn/grover.h"
#include "gqnn/layout.h"
#include "gqnn/state.h"

namespace gqnn {

/// Upper bound on any single register width and on the joint weight width.
inline constexpr std::size_t kMaxRegisterBits = 20;

enum class Activation { Identity };

struct Synapse {
    std::string input;   // input neuron name
    std::string hidden;  // hidden neuron name; also the name of its output
    std::string weight;  // trainable weight name
    std::size_t input_bits = 0;
    std::size_t weight_bits = 0;
    std::size_t product_bits = 0;
};

struct NetworkSpec {
    std::vector<Synapse> synapses;
    Activation activation = Activation::Identity;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    const Synapse *find_hidden(const std::string &hidden) const;
    std::size_t weight_bits() const;
    std::uint64_t weight_space() const { return std::uint64_t{1} << weight_bits(); }
};

using Assignment = std::map<std::string, std::uint64_t>;

struct TrainingSample {
    Assignment inputs;    // input neuron name -> value
    Assignment required;  // hidden neuron name -> required value
};

using Dataset = std::vector<TrainingSample>;

/// Validates the network and every sample against it. Each required output
/// must name a hidden neuron whose input is supplied by the same sample.
void validate_dataset(const NetworkSpec &net, const Dataset &dataset);

/// Weight assignment for joint search value `index`; synapse 0 holds the low
/// bits.
Assignment decode_weights(const NetworkSpec &net, std::uint64_t index);
std::uint64_t encode_weights(const NetworkSpec &net, const Assignment &weights);

/// hidden = input * weight per synapse, reduced mod 2^product_bits when
/// `modular`. Throws std::invalid_argument on a missing input or weight.
Assignment classical_forward(const NetworkSpec &net, const Assignment &weights, const Assignment &inputs,
                             bool modular);

/// True iff every required value of every sample is reproduced.
bool classical_satisfies(const NetworkSpec &net, const Assignment &weights, const Dataset &dataset, bool modular);

struct SolutionCount {
    std::uint64_t modular = 0;
    std::uint64_t exact = 0;
};

/// Exhaustive count over the weight space.
SolutionCount count_solutions(const NetworkSpec &net, const Dataset &dataset);

/// Two samples that feed the same input value to a synapse but require
/// different outputs from it.
struct SampleConflict {
    std::size_t first_sample;
    std::size_t second_sample;
    std::string hidden;
};

std::vector<SampleConflict> find_conflicts(const NetworkSpec &net, const Dataset &dataset);

struct SynapseRegisters {
    QubitRange input;
    QubitRange weight;
    QubitRange product;
};

struct Condition {
    std::size_t sample;
    std::string hidden;
    Qubit flag;
};

/// Qubit plan: all weight registers first (so the joint search value is the
/// low bits of the basis index), then per-synapse input and product
/// registers, one flag per (sample, required output) condition and the
/// multiplier ancillas shared by every synapse.
struct QnnLayout {
    RegisterLayout registers;
    std::vector<SynapseRegisters> synapses;
    std::vector<Condition> conditions;
    QubitRange ancilla;
    AdderKind adder = AdderKind::RippleCarry;

    std::size_t num_qubits() const { return registers.num_qubits(); }
    std::vector<QubitRange> weight_ranges() const;
    std::vector<Qubit> flags() const;
};

/// Throws QubitBudgetExceeded when the plan needs more than kMaxQubits.
QnnLayout build_layout(const NetworkSpec &net, const Dataset &dataset, AdderKind adder = AdderKind::RippleCarry);

/// Encode inputs, multiply, compare into flags, then undo the multiplication
/// and input encoding, one sample at a time. Leaves only the flags set.
Circuit build_flag_computation(const NetworkSpec &net, const Dataset &dataset, const QnnLayout &layout);

/// Phase oracle: flag computation, multi-controlled Z across all flags,
/// flag uncomputation.
Circuit build_training_oracle(const NetworkSpec &net, const Dataset &dataset, const QnnLayout &layout);

/// Forward pass with basis-encoded weights and inputs: after the circuit the
/// product registers hold input * weight mod 2^product_bits. Synapses whose
/// input is absent from `inputs` are left untouched.
Circuit build_forward_circuit(const NetworkSpec &net, const QnnLayout &layout, const Assignment &weights,
                              const Assignment &inputs);

struct TrainingCircuit {
    Circuit circuit;
    QnnLayout layout;
    GroverPlan plan;
    SolutionCount solutions;
};

/// Uniform initialization of the weights followed by `iterations` rounds of
/// oracle and diffusion (scheduled from the modular solution count when
/// unset). Throws NoSolutionError when no weight satisfies the dataset modulo
/// 2^product_bits.
TrainingCircuit build_training_circuit(const NetworkSpec &net, const Dataset &dataset,
                                       std::optional<std::uint64_t> iterations = std::nullopt,
                                       AdderKind adder = AdderKind::RippleCarry);

struct TrainOptions {
    std::uint64_t seed = 0;
    std::uint64_t shots = 1024;
    std::optional<std::uint64_t> iterations;
    AdderKind adder = AdderKind::RippleCarry;
};

struct AcceptedWeight {
    Assignment weights;
    std::uint64_t index = 0;
    double probability = 0.0;
    /// Satisfies the dataset at full precision, not only mod 2^product_bits.
    bool verified = false;
};

struct TrainResult {
    std::vector<double> distribution;  // indexed by joint weight value
    std::vector<AcceptedWeight> accepted;
    Histogram histogram;
    std::uint64_t iterations = 0;
    SolutionCount solutions;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::size_t num_qubits = 0;
    std::size_t num_gates = 0;
    /// Probability that every non-weight qubit reads 0 after the circuit.
    double clean_ancilla_probability = 0.0;

    bool has_verified() const;
};

/// Builds and simulates the training circuit, then keeps every weight whose
/// exact probability exceeds 1/(2N) and that satisfies the dataset at least
/// modulo 2^product_bits.
TrainResult train(const NetworkSpec &net, const Dataset &dataset, const TrainOptions &options = {});

struct VerifyRow {
    std::size_t sample = 0;
    std::string hidden;
    std::uint64_t output = 0;
    std::uint64_t required = 0;
    bool match = false;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;

    bool all_match() const;
};

/// Runs the forward circuit once per sample and compares each product
/// register (read as a point mass) with the required value.
VerifyReport verify(const NetworkSpec &net, const Assignment &weights, const Dataset &dataset);

/// Forward circuit with trained weights and new inputs; returns the product
/// register value per hidden neuron.
Assignment infer(const NetworkSpec &net, const Assignment &weights, const Assignment &inputs);

}  // namespace gqnn
