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

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "config.h"
#include "gqnn/circuit_io.h"
#include "gqnn/errors.h"
#include "gqnn/qnn.h"
#include "json.hpp"

namespace gqnn::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> iterations;
    std::string weights;
    std::string input;
    std::string out;
    std::string format = "json";
    std::string what = "training";
};

// Most significant bit first, padded to the register width.
std::string binary(std::uint64_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; ++j) {
        if ((value >> j) & 1U) s[width - 1 - j] = '1';
    }
    return s;
}

std::string describe(const Assignment &a) {
    std::string s;
    for (const auto &[name, value] : a) {
        if (!s.empty()) s += ',';
        s += name + "=" + std::to_string(value);
    }
    return s;
}

Json to_json(const Assignment &a) {
    Json j = Json::object();
    for (const auto &[name, value] : a) j[name] = value;
    return j;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

// Writes `report` to --out or `out`. Scalars sit on their own lines, so the
// volatile "timestamp" and "wall_time_ms" entries can be filtered line-wise.
void emit(const Json &report, const Options &opt, std::ostream &out) {
    const std::string text = report.dump(2) + "\n";
    if (opt.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw ConfigError(opt.out + ": cannot open for writing");
    f << text;
}

class Command {
   public:
    Command(const Options &opt, std::ostream &out, std::ostream &err, LogLevel level)
        : opt_(opt), out_(out), err_(err), level_(level) {}

    int train() {
        const auto start = std::chrono::steady_clock::now();
        ExperimentConfig cfg = load_config(opt_.config);
        TrainOptions options;
        options.seed = opt_.seed.value_or(cfg.run.seed);
        options.shots = opt_.shots.value_or(cfg.run.shots);
        options.iterations = opt_.iterations ? opt_.iterations : cfg.run.iterations;
        options.adder = cfg.run.adder;
        if (options.shots == 0) throw ConfigError("--shots: must be at least 1");

        Json report;
        report["command"] = "train";
        try {
            const TrainResult result = gqnn::train(cfg.network, cfg.dataset, options);
            const int code = result.has_verified() ? kOk : kMismatch;
            report["status"] = code == kOk ? "ok" : "no_verified_weight";
            fill_train(report, cfg, result);
            report["wall_time_ms"] = elapsed_ms(start);
            report["timestamp"] = utc_timestamp();
            emit(report, opt_, out_);
            if (level_ != LogLevel::Quiet) print_train_table(cfg, result);
            return code;
        } catch (const NoSolutionError &e) {
            report["status"] = "no_solution";
            report["message"] = e.what();
            Json conflicts = Json::array();
            for (const SampleConflict &c : find_conflicts(cfg.network, cfg.dataset)) {
                conflicts.push_back({{"samples", {c.first_sample, c.second_sample}}, {"hidden", c.hidden}});
            }
            report["conflicts"] = std::move(conflicts);
            report["timestamp"] = utc_timestamp();
            emit(report, opt_, out_);
            err_ << "no solution: " << e.what() << "\n";
            return kNoSolution;
        } catch (const QubitBudgetExceeded &e) {
            report["status"] = "qubit_budget_exceeded";
            report["message"] = e.what();
            report["required_qubits"] = e.required();
            report["qubit_limit"] = e.limit();
            report["timestamp"] = utc_timestamp();
            emit(report, opt_, out_);
            err_ << e.what() << "\n";
            return kQubitBudget;
        }
    }

    int verify() {
        ExperimentConfig cfg = load_config(opt_.config);
        const Assignment weights = required_weights();
        const VerifyReport vr = gqnn::verify(cfg.network, weights, cfg.dataset);

        Json report;
        report["command"] = "verify";
        report["weights"] = to_json(weights);
        report["status"] = vr.all_match() ? "ok" : "mismatch";
        Json rows = Json::array();
        Json failing = Json::array();
        for (const VerifyRow &r : vr.rows) {
            rows.push_back({{"sample", r.sample},
                            {"hidden", r.hidden},
                            {"output", r.output},
                            {"required", r.required},
                            {"match", r.match}});
            if (!r.match && (failing.empty() || failing.back() != r.sample)) failing.push_back(r.sample);
        }
        report["rows"] = std::move(rows);
        report["failing_samples"] = std::move(failing);
        emit(report, opt_, out_);

        if (level_ != LogLevel::Quiet) {
            err_ << std::left << std::setw(8) << "sample" << std::setw(12) << "neuron" << std::setw(10) << "output"
                 << std::setw(10) << "required" << "match\n";
            for (const VerifyRow &r : vr.rows) {
                err_ << std::setw(8) << r.sample << std::setw(12) << r.hidden << std::setw(10) << r.output
                     << std::setw(10) << r.required << (r.match ? "yes" : "NO") << "\n";
            }
        }
        return vr.all_match() ? kOk : kMismatch;
    }

    int infer() {
        ExperimentConfig cfg = load_config(opt_.config);
        const Assignment weights = required_weights();
        if (opt_.input.empty()) throw ConfigError("--input: required for infer");
        const Assignment inputs = parse_assignment(opt_.input, "--input");
        const Assignment outputs = gqnn::infer(cfg.network, weights, inputs);

        Json values = Json::object();
        for (const auto &[hidden, value] : outputs) {
            const std::string bits = binary(value, cfg.network.find_hidden(hidden)->product_bits);
            values[hidden] = {{"value", value}, {"binary", bits}};
            out_ << hidden << " = " << value << " (" << bits << ")\n";
        }
        if (!opt_.out.empty()) {
            Json report;
            report["command"] = "infer";
            report["weights"] = to_json(weights);
            report["inputs"] = to_json(inputs);
            report["outputs"] = std::move(values);
            emit(report, opt_, out_);
        }
        return kOk;
    }

    int export_circuit() {
        if (opt_.format != "json" && opt_.format != "qasm") {
            throw ConfigError("--format: expected json or qasm, got '" + opt_.format + "'");
        }
        ExperimentConfig cfg = load_config(opt_.config);
        Circuit circuit;
        RegisterLayout layout;
        if (opt_.what == "training") {
            TrainingCircuit tc = build_training_circuit(
                cfg.network, cfg.dataset, opt_.iterations ? opt_.iterations : cfg.run.iterations, cfg.run.adder);
            circuit = std::move(tc.circuit);
            layout = std::move(tc.layout.registers);
        } else if (opt_.what == "forward") {
            const Assignment weights = required_weights();
            const Assignment inputs =
                opt_.input.empty() ? cfg.dataset.front().inputs : parse_assignment(opt_.input, "--input");
            QnnLayout qlayout = build_layout(cfg.network, {}, cfg.run.adder);
            circuit = build_forward_circuit(cfg.network, qlayout, weights, inputs);
            layout = std::move(qlayout.registers);
        } else {
            throw ConfigError("--what: expected training or forward, got '" + opt_.what + "'");
        }
        const std::string text =
            opt_.format == "json" ? circuit_to_json(circuit, layout) : circuit_to_qasm(circuit, layout);
        if (opt_.out.empty()) {
            out_ << text;
        } else {
            std::ofstream f(opt_.out, std::ios::binary);
            if (!f) throw ConfigError(opt_.out + ": cannot open for writing");
            f << text;
        }
        if (level_ == LogLevel::Debug) {
            err_ << "exported " << circuit.size() << " gates on " << circuit.num_qubits() << " qubits\n";
        }
        return kOk;
    }

   private:
    Assignment required_weights() const {
        if (opt_.weights.empty()) throw ConfigError("--weights: required for this command");
        return parse_assignment(opt_.weights, "--weights");
    }

    static double elapsed_ms(std::chrono::steady_clock::time_point start) {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    void fill_train(Json &report, const ExperimentConfig &cfg, const TrainResult &result) const {
        report["num_qubits"] = result.num_qubits;
        report["num_gates"] = result.num_gates;
        report["search_space"] = result.distribution.size();
        report["solutions_modular"] = result.solutions.modular;
        report["solutions_exact"] = result.solutions.exact;
        report["iterations"] = result.iterations;
        report["seed"] = result.seed;
        report["shots"] = result.shots;
        report["clean_ancilla_probability"] = result.clean_ancilla_probability;

        Json accepted = Json::array();
        Json unverified = Json::array();
        for (const AcceptedWeight &a : result.accepted) {
            Json entry;
            entry["weights"] = to_json(a.weights);
            entry["probability"] = a.probability;
            entry["verified"] = a.verified;
            accepted.push_back(entry);
            if (!a.verified) unverified.push_back(to_json(a.weights));
        }
        report["accepted"] = std::move(accepted);
        report["unverified"] = std::move(unverified);

        Json distribution = Json::array();
        for (std::uint64_t v = 0; v < result.distribution.size(); ++v) {
            distribution.push_back(
                {{"weights", to_json(decode_weights(cfg.network, v))}, {"probability", result.distribution[v]}});
        }
        report["distribution"] = std::move(distribution);

        Json histogram = Json::array();
        for (const auto &[v, count] : result.histogram) {
            histogram.push_back({{"weights", to_json(decode_weights(cfg.network, v))}, {"count", count}});
        }
        report["histogram"] = std::move(histogram);
    }

    void print_train_table(const ExperimentConfig &cfg, const TrainResult &result) const {
        err_ << "qubits " << result.num_qubits << ", gates " << result.num_gates << ", iterations "
             << result.iterations << ", solutions " << result.solutions.modular << " (modular) / "
             << result.solutions.exact << " (exact)\n";
        err_ << std::left << std::setw(24) << "weights" << std::setw(14) << "probability"
             << std::setw(8) << "shots" << "verified\n";
        for (const AcceptedWeight &a : result.accepted) {
            const auto hit = result.histogram.find(a.index);
            err_ << std::setw(24) << describe(a.weights) << std::setw(14) << std::fixed << std::setprecision(9)
                 << a.probability << std::setw(8) << (hit == result.histogram.end() ? 0 : hit->second)
                 << (a.verified ? "yes" : "no (overflow)") << "\n";
        }
        if (level_ == LogLevel::Debug) {
            for (std::uint64_t v = 0; v < result.distribution.size(); ++v) {
                err_ << "  P(" << describe(decode_weights(cfg.network, v)) << ") = " << result.distribution[v]
                     << "\n";
            }
        }
        err_ << std::defaultfloat;
    }

    const Options &opt_;
    std::ostream &out_;
    std::ostream &err_;
    LogLevel level_;
};

}  // namespace

LogLevel log_level_from_env() {
    const char *env = std::getenv("GQNN_LOG");
    if (env == nullptr) return LogLevel::Info;
    const std::string_view v(env);
    if (v == "quiet") return LogLevel::Quiet;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Info;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, LogLevel level) {
    Options opt;
    CLI::App app{"Train single-layer perceptrons with Grover search on a state-vector simulator", "gqnn"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *cmd) {
        cmd->add_option("--config", opt.config, "Experiment config (JSON, comments allowed)")->required();
        cmd->add_option("--out", opt.out, "Write the report or circuit to this file instead of stdout");
    };
    CLI::App *train = app.add_subcommand("train", "Run Grover training and report the found weights");
    common(train);
    train->add_option("--seed", opt.seed, "Sampling seed (overrides config)");
    train->add_option("--shots", opt.shots, "Number of sampled shots (overrides config)");
    train->add_option("--iterations", opt.iterations, "Grover iterations (default: scheduled from the solution count)");

    CLI::App *verify = app.add_subcommand("verify", "Check a weight assignment against every training sample");
    common(verify);
    verify->add_option("--weights", opt.weights, "Weights as name=value,...");

    CLI::App *infer = app.add_subcommand("infer", "Run the trained network on new inputs");
    common(infer);
    infer->add_option("--weights", opt.weights, "Weights as name=value,...");
    infer->add_option("--input", opt.input, "Inputs as name=value,...");

    CLI::App *exp = app.add_subcommand("export", "Write the training or forward circuit as JSON or OpenQASM 2.0");
    common(exp);
    exp->add_option("--what", opt.what, "training or forward");
    exp->add_option("--format", opt.format, "json or qasm");
    exp->add_option("--weights", opt.weights, "Weights for --what forward");
    exp->add_option("--input", opt.input, "Inputs for --what forward (default: first sample)");
    exp->add_option("--iterations", opt.iterations, "Grover iterations for --what training");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    Command cmd(opt, out, err, level);
    try {
        if (train->parsed()) return cmd.train();
        if (verify->parsed()) return cmd.verify();
        if (infer->parsed()) return cmd.infer();
        return cmd.export_circuit();
    } catch (const NoSolutionError &e) {
        err << "no solution: " << e.what() << "\n";
        return kNoSolution;
    } catch (const QubitBudgetExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kQubitBudget;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

}  // namespace gqnn::cli
