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

#include "gqnn/qnn.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gqnn/errors.h"

namespace gqnn {

namespace {

std::string field(std::size_t synapse, const char *name) {
    return "synapses[" + std::to_string(synapse) + "]." + name;
}

bool fits(std::uint64_t value, std::size_t bits) { return bits >= 64 || (value >> bits) == 0; }

std::uint64_t low_bits(std::uint64_t value, std::size_t bits) {
    return bits >= 64 ? value : value & ((std::uint64_t{1} << bits) - 1);
}

std::size_t synapse_index(const NetworkSpec &net, const std::string &hidden) {
    for (std::size_t k = 0; k < net.synapses.size(); ++k) {
        if (net.synapses[k].hidden == hidden) return k;
    }
    throw std::invalid_argument("no synapse feeds hidden neuron '" + hidden + "'");
}

// One comparison the oracle performs: synapse k fed `input` must yield `required`.
struct Check {
    std::size_t synapse;
    std::uint64_t input;
    std::uint64_t required;
};

std::vector<std::vector<Check>> compile_checks(const NetworkSpec &net, const Dataset &dataset) {
    std::vector<std::vector<Check>> out;
    for (const TrainingSample &s : dataset) {
        std::vector<Check> checks;
        for (const auto &[hidden, required] : s.required) {
            const std::size_t k = synapse_index(net, hidden);
            checks.push_back({k, s.inputs.at(net.synapses[k].input), required});
        }
        out.push_back(std::move(checks));
    }
    return out;
}

std::vector<std::uint64_t> split_weights(const NetworkSpec &net, std::uint64_t index) {
    std::vector<std::uint64_t> w;
    for (const Synapse &s : net.synapses) {
        w.push_back(low_bits(index, s.weight_bits));
        index >>= s.weight_bits;
    }
    return w;
}

bool satisfies(const NetworkSpec &net, const std::vector<std::uint64_t> &weights,
               const std::vector<std::vector<Check>> &checks, bool modular) {
    for (const auto &sample : checks) {
        for (const Check &c : sample) {
            std::uint64_t out = c.input * weights[c.synapse];
            if (modular) out = low_bits(out, net.synapses[c.synapse].product_bits);
            if (out != c.required) return false;
        }
    }
    return true;
}

void check_weights(const NetworkSpec &net, const Assignment &weights) {
    for (const Synapse &s : net.synapses) {
        auto it = weights.find(s.weight);
        if (it == weights.end()) {
            throw std::invalid_argument("missing value for weight '" + s.weight + "'");
        }
        if (!fits(it->second, s.weight_bits)) {
            throw std::invalid_argument("weight '" + s.weight + "' = " + std::to_string(it->second) +
                                        " does not fit in " + std::to_string(s.weight_bits) + " bits");
        }
    }
    for (const auto &[name, value] : weights) {
        const bool known = std::any_of(net.synapses.begin(), net.synapses.end(),
                                       [&](const Synapse &s) { return s.weight == name; });
        if (!known) {
            throw std::invalid_argument("unknown weight '" + name + "'");
        }
    }
}

std::uint64_t read_point_mass(const QuantumState &state, QubitRange reg) {
    const std::vector<double> dist = probabilities(state, reg);
    const auto it = std::max_element(dist.begin(), dist.end());
    if (*it < 1.0 - 1e-9) {
        throw std::logic_error("register does not hold a definite value (max probability " + std::to_string(*it) +
                               ")");
    }
    return static_cast<std::uint64_t>(it - dist.begin());
}

}  // namespace

void NetworkSpec::validate() const {
    if (synapses.empty()) {
        throw std::invalid_argument("synapses: at least one synapse is required");
    }
    std::set<std::string> names;
    for (std::size_t k = 0; k < synapses.size(); ++k) {
        const Synapse &s = synapses[k];
        for (const auto &[name, key] : {std::pair{&s.input, "input"}, {&s.hidden, "hidden"}, {&s.weight, "weight"}}) {
            if (name->empty()) {
                throw std::invalid_argument(field(k, key) + ": name must not be empty");
            }
            if (!names.insert(*name).second) {
                throw std::invalid_argument(field(k, key) + ": name '" + *name + "' is used more than once");
            }
        }
        for (const auto &[bits, key] : {std::pair{s.input_bits, "input_bits"},
                                        {s.weight_bits, "weight_bits"},
                                        {s.product_bits, "product_bits"}}) {
            if (bits < 1 || bits > kMaxRegisterBits) {
                throw std::invalid_argument(field(k, key) + ": " + std::to_string(bits) + " outside 1.." +
                                            std::to_string(kMaxRegisterBits));
            }
        }
    }
    if (weight_bits() > kMaxRegisterBits) {
        throw std::invalid_argument("synapses: total weight bits " + std::to_string(weight_bits()) + " exceed " +
                                    std::to_string(kMaxRegisterBits));
    }
}

const Synapse *NetworkSpec::find_hidden(const std::string &hidden) const {
    auto it = std::find_if(synapses.begin(), synapses.end(), [&](const Synapse &s) { return s.hidden == hidden; });
    return it == synapses.end() ? nullptr : &*it;
}

std::size_t NetworkSpec::weight_bits() const {
    std::size_t total = 0;
    for (const Synapse &s : synapses) total += s.weight_bits;
    return total;
}

void validate_dataset(const NetworkSpec &net, const Dataset &dataset) {
    net.validate();
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const TrainingSample &sample = dataset[i];
        const std::string at = "dataset[" + std::to_string(i) + "]";
        for (const auto &[name, value] : sample.inputs) {
            auto it = std::find_if(net.synapses.begin(), net.synapses.end(),
                                   [&](const Synapse &s) { return s.input == name; });
            if (it == net.synapses.end()) {
                throw std::invalid_argument(at + ".inputs." + name + ": unknown input neuron");
            }
            if (!fits(value, it->input_bits)) {
                throw std::invalid_argument(at + ".inputs." + name + ": value " + std::to_string(value) +
                                            " does not fit in " + std::to_string(it->input_bits) + " bits");
            }
        }
        if (sample.required.empty()) {
            throw std::invalid_argument(at + ".required: at least one required output is needed");
        }
        for (const auto &[name, value] : sample.required) {
            const Synapse *s = net.find_hidden(name);
            if (s == nullptr) {
                throw std::invalid_argument(at + ".required." + name + ": unknown hidden neuron");
            }
            if (!fits(value, s->product_bits)) {
                throw std::invalid_argument(at + ".required." + name + ": value " + std::to_string(value) +
                                            " does not fit in " + std::to_string(s->product_bits) + " bits");
            }
            if (!sample.inputs.contains(s->input)) {
                throw std::invalid_argument(at + ".inputs." + s->input + ": missing, required output '" + name +
                                            "' depends on it");
            }
        }
    }
}

Assignment decode_weights(const NetworkSpec &net, std::uint64_t index) {
    Assignment out;
    const std::vector<std::uint64_t> w = split_weights(net, index);
    for (std::size_t k = 0; k < net.synapses.size(); ++k) {
        out[net.synapses[k].weight] = w[k];
    }
    return out;
}

std::uint64_t encode_weights(const NetworkSpec &net, const Assignment &weights) {
    check_weights(net, weights);
    std::uint64_t index = 0;
    std::size_t shift = 0;
    for (const Synapse &s : net.synapses) {
        index |= weights.at(s.weight) << shift;
        shift += s.weight_bits;
    }
    return index;
}

Assignment classical_forward(const NetworkSpec &net, const Assignment &weights, const Assignment &inputs,
                             bool modular) {
    Assignment out;
    for (const Synapse &s : net.synapses) {
        auto w = weights.find(s.weight);
        if (w == weights.end()) {
            throw std::invalid_argument("classical_forward: missing value for weight '" + s.weight + "'");
        }
        auto in = inputs.find(s.input);
        if (in == inputs.end()) {
            throw std::invalid_argument("classical_forward: missing value for input '" + s.input + "'");
        }
        const std::uint64_t product = in->second * w->second;
        out[s.hidden] = modular ? low_bits(product, s.product_bits) : product;
    }
    return out;
}

bool classical_satisfies(const NetworkSpec &net, const Assignment &weights, const Dataset &dataset, bool modular) {
    if (dataset.empty()) {
        throw std::invalid_argument("classical_satisfies: empty dataset");
    }
    check_weights(net, weights);
    std::vector<std::uint64_t> w;
    for (const Synapse &s : net.synapses) w.push_back(weights.at(s.weight));
    return satisfies(net, w, compile_checks(net, dataset), modular);
}

SolutionCount count_solutions(const NetworkSpec &net, const Dataset &dataset) {
    validate_dataset(net, dataset);
    if (dataset.empty()) {
        throw std::invalid_argument("count_solutions: empty dataset");
    }
    const auto checks = compile_checks(net, dataset);
    SolutionCount count;
    for (std::uint64_t index = 0; index < net.weight_space(); ++index) {
        const std::vector<std::uint64_t> w = split_weights(net, index);
        if (satisfies(net, w, checks, true)) ++count.modular;
        if (satisfies(net, w, checks, false)) ++count.exact;
    }
    return count;
}

std::vector<SampleConflict> find_conflicts(const NetworkSpec &net, const Dataset &dataset) {
    std::vector<SampleConflict> out;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        for (std::size_t j = i + 1; j < dataset.size(); ++j) {
            for (const auto &[hidden, required] : dataset[i].required) {
                auto other = dataset[j].required.find(hidden);
                const Synapse *s = net.find_hidden(hidden);
                if (other == dataset[j].required.end() || s == nullptr || other->second == required) continue;
                auto a = dataset[i].inputs.find(s->input);
                auto b = dataset[j].inputs.find(s->input);
                if (a != dataset[i].inputs.end() && b != dataset[j].inputs.end() && a->second == b->second) {
                    out.push_back({i, j, hidden});
                }
            }
        }
    }
    return out;
}

std::vector<QubitRange> QnnLayout::weight_ranges() const {
    std::vector<QubitRange> out;
    for (const SynapseRegisters &s : synapses) out.push_back(s.weight);
    return out;
}

std::vector<Qubit> QnnLayout::flags() const {
    std::vector<Qubit> out;
    for (const Condition &c : conditions) out.push_back(c.flag);
    return out;
}

QnnLayout build_layout(const NetworkSpec &net, const Dataset &dataset, AdderKind adder) {
    validate_dataset(net, dataset);

    std::size_t conditions = 0;
    for (const TrainingSample &s : dataset) conditions += s.required.size();
    std::size_t ancillas = 0;
    std::size_t total = conditions;
    for (const Synapse &s : net.synapses) {
        total += s.input_bits + s.weight_bits + s.product_bits;
        ancillas = std::max(ancillas, multiplier_ancillas(s.input_bits, s.weight_bits, s.product_bits, adder));
    }
    total += ancillas;
    if (total > kMaxQubits) {
        throw QubitBudgetExceeded(total, kMaxQubits);
    }

    QnnLayout layout;
    layout.adder = adder;
    layout.synapses.resize(net.synapses.size());
    for (std::size_t k = 0; k < net.synapses.size(); ++k) {
        const Synapse &s = net.synapses[k];
        layout.synapses[k].weight = layout.registers.allocate(RegisterRole::Weight, s.weight, s.weight_bits);
    }
    for (std::size_t k = 0; k < net.synapses.size(); ++k) {
        const Synapse &s = net.synapses[k];
        layout.synapses[k].input = layout.registers.allocate(RegisterRole::Input, s.input, s.input_bits);
        layout.synapses[k].product = layout.registers.allocate(RegisterRole::Product, s.hidden, s.product_bits);
    }
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        for (const auto &[hidden, required] : dataset[i].required) {
            const std::string name = "flag[" + std::to_string(i) + "]." + hidden;
            const QubitRange r = layout.registers.allocate(RegisterRole::Flag, name, 1);
            layout.conditions.push_back({i, hidden, r.first});
        }
    }
    layout.ancilla = layout.registers.allocate(RegisterRole::Ancilla, "ancilla", ancillas);
    layout.registers.validate();
    return layout;
}

Circuit build_flag_computation(const NetworkSpec &net, const Dataset &dataset, const QnnLayout &layout) {
    const std::size_t n = layout.num_qubits();
    Circuit c(n);
    std::size_t condition = 0;
    for (const TrainingSample &sample : dataset) {
        Circuit forward(n);
        for (const auto &[hidden, required] : sample.required) {
            const std::size_t k = synapse_index(net, hidden);
            const SynapseRegisters &regs = layout.synapses[k];
            encode_basis(forward, regs.input, sample.inputs.at(net.synapses[k].input));
            forward.append(build_multiplier(n, regs.input, regs.weight, regs.product, layout.ancilla, layout.adder));
        }
        c.append(forward);
        for (const auto &[hidden, required] : sample.required) {
            const std::size_t k = synapse_index(net, hidden);
            const Condition &cond = layout.conditions.at(condition++);
            c.append(build_constant_equality(n, layout.synapses[k].product, required, cond.flag));
        }
        c.append(inverse(forward));
    }
    return c;
}

Circuit build_training_oracle(const NetworkSpec &net, const Dataset &dataset, const QnnLayout &layout) {
    const std::vector<Qubit> flags = layout.flags();
    return build_oracle(build_flag_computation(net, dataset, layout), flags);
}

Circuit build_forward_circuit(const NetworkSpec &net, const QnnLayout &layout, const Assignment &weights,
                              const Assignment &inputs) {
    check_weights(net, weights);
    const std::size_t n = layout.num_qubits();
    Circuit c(n);
    for (std::size_t k = 0; k < net.synapses.size(); ++k) {
        const Synapse &s = net.synapses[k];
        const SynapseRegisters &regs = layout.synapses[k];
        auto in = inputs.find(s.input);
        if (in == inputs.end()) continue;
        if (!fits(in->second, s.input_bits)) {
            throw std::invalid_argument("input '" + s.input + "' = " + std::to_string(in->second) +
                                        " does not fit in " + std::to_string(s.input_bits) + " bits");
        }
        encode_basis(c, regs.weight, weights.at(s.weight));
        encode_basis(c, regs.input, in->second);
        c.append(build_multiplier(n, regs.input, regs.weight, regs.product, layout.ancilla, layout.adder));
    }
    for (const RegisterEntry &e : layout.registers.entries()) {
        c.label(e.range, e.name);
    }
    return c;
}

TrainingCircuit build_training_circuit(const NetworkSpec &net, const Dataset &dataset,
                                       std::optional<std::uint64_t> iterations, AdderKind adder) {
    const SolutionCount solutions = count_solutions(net, dataset);
    if (solutions.modular == 0) {
        std::ostringstream msg;
        msg << "no weight assignment reproduces the dataset at these register widths";
        for (const SampleConflict &c : find_conflicts(net, dataset)) {
            msg << "; samples " << c.first_sample << " and " << c.second_sample << " require different values of '"
                << c.hidden << "' for the same input";
        }
        throw NoSolutionError(msg.str());
    }
    QnnLayout layout = build_layout(net, dataset, adder);
    GroverPlan plan = make_plan(layout.weight_ranges(), solutions.modular, iterations);

    const std::size_t n = layout.num_qubits();
    const Circuit oracle = build_training_oracle(net, dataset, layout);
    const Circuit diffusion = build_diffusion(n, plan.search);

    Circuit circuit(n);
    circuit.append(build_uniform_init(n, plan.search));
    for (std::uint64_t i = 0; i < plan.iterations; ++i) {
        circuit.append(oracle);
        circuit.append(diffusion);
    }
    for (const RegisterEntry &e : layout.registers.entries()) {
        circuit.label(e.range, e.name);
    }
    return {std::move(circuit), std::move(layout), std::move(plan), solutions};
}

bool TrainResult::has_verified() const {
    return std::any_of(accepted.begin(), accepted.end(), [](const AcceptedWeight &a) { return a.verified; });
}

TrainResult train(const NetworkSpec &net, const Dataset &dataset, const TrainOptions &options) {
    if (options.shots == 0) {
        throw std::invalid_argument("train: shots must be at least 1");
    }
    TrainingCircuit tc = build_training_circuit(net, dataset, options.iterations, options.adder);
    const QuantumState state = simulate(tc.circuit);
    const std::vector<QubitRange> weights = tc.layout.weight_ranges();

    TrainResult result;
    result.distribution = probabilities(state, weights);
    result.histogram = sample_distribution(result.distribution, options.shots, options.seed);
    result.iterations = tc.plan.iterations;
    result.solutions = tc.solutions;
    result.seed = options.seed;
    result.shots = options.shots;
    result.num_qubits = tc.circuit.num_qubits();
    result.num_gates = tc.circuit.size();
    result.clean_ancilla_probability = probability_zero_outside(state, weights);

    const auto checks = compile_checks(net, dataset);
    const double threshold = 1.0 / (2.0 * static_cast<double>(tc.plan.search_space));
    for (std::uint64_t v = 0; v < result.distribution.size(); ++v) {
        if (result.distribution[v] <= threshold) continue;
        const std::vector<std::uint64_t> w = split_weights(net, v);
        if (!satisfies(net, w, checks, true)) continue;
        result.accepted.push_back(
            {decode_weights(net, v), v, result.distribution[v], satisfies(net, w, checks, false)});
    }
    return result;
}

bool VerifyReport::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow &r) { return r.match; });
}

VerifyReport verify(const NetworkSpec &net, const Assignment &weights, const Dataset &dataset) {
    const QnnLayout layout = build_layout(net, {});
    check_weights(net, weights);
    validate_dataset(net, dataset);
    VerifyReport report;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const QuantumState state = simulate(build_forward_circuit(net, layout, weights, dataset[i].inputs));
        for (const auto &[hidden, required] : dataset[i].required) {
            const std::size_t k = synapse_index(net, hidden);
            const std::uint64_t output = read_point_mass(state, layout.synapses[k].product);
            report.rows.push_back({i, hidden, output, required, output == required});
        }
    }
    return report;
}

Assignment infer(const NetworkSpec &net, const Assignment &weights, const Assignment &inputs) {
    const QnnLayout layout = build_layout(net, {});
    for (const Synapse &s : net.synapses) {
        if (!inputs.contains(s.input)) {
            throw std::invalid_argument("infer: missing value for input '" + s.input + "'");
        }
    }
    for (const auto &[name, value] : inputs) {
        const bool known = std::any_of(net.synapses.begin(), net.synapses.end(),
                                       [&](const Synapse &s) { return s.input == name; });
        if (!known) throw std::invalid_argument("infer: unknown input '" + name + "'");
    }
    const QuantumState state = simulate(build_forward_circuit(net, layout, weights, inputs));
    Assignment out;
    for (std::size_t k = 0; k < net.synapses.size(); ++k) {
        out[net.synapses[k].hidden] = read_point_mass(state, layout.synapses[k].product);
    }
    return out;
}

}  // namespace gqnn
