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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "config.h"
#include "gqnn/circuit_io.h"
#include "gqnn/state.h"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace gqnn;
using nlohmann::json;

namespace {

const std::string kExampleConfig = std::string(GQNN_SOURCE_DIR) + "/configs/single_synapse.json";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, cli::LogLevel::Quiet);
    return {code, out.str(), err.str()};
}

// Writes `text` to a fresh file under the test temp dir.
std::string write_temp(const std::string &name, const std::string &text) {
    const auto dir = std::filesystem::temp_directory_path() / "gqnn_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

std::string single_synapse_config(int input_bits, int weight_bits, int product_bits, const std::string &dataset) {
    std::ostringstream s;
    s << "{\n"
      << "  \"network\": {\"synapses\": [{\"input\": \"i1\", \"hidden\": \"h1\", \"weight\": \"w1\",\n"
      << "    \"input_bits\": " << input_bits << ", \"weight_bits\": " << weight_bits
      << ", \"product_bits\": " << product_bits << "}]},\n"
      << "  \"dataset\": " << dataset << ",\n"
      << "  \"run\": {\"product_bits_policy\": \"explicit\"}\n"
      << "}\n";
    return s.str();
}

std::string strip_volatile(const std::string &text) {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line)) {
        if (line.find("\"timestamp\"") != std::string::npos || line.find("\"wall_time_ms\"") != std::string::npos) {
            continue;
        }
        kept += line + "\n";
    }
    return kept;
}

}  // namespace

TEST(cli_train, example_config) {
    const Result r = run_cli({"train", "--config", kExampleConfig});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const json report = json::parse(r.out);
    EXPECT_EQ(report["status"], "ok");
    EXPECT_EQ(report["iterations"], 1);
    EXPECT_EQ(report["search_space"], 4);
    ASSERT_EQ(report["accepted"].size(), 1u);
    EXPECT_EQ(report["accepted"][0]["weights"]["w1"], 2);
    EXPECT_TRUE(report["accepted"][0]["verified"].get<bool>());
    EXPECT_NEAR(report["accepted"][0]["probability"].get<double>(), 1.0, 1e-9);
    EXPECT_EQ(report["histogram"][0]["count"], 1024);
}

TEST(cli_train, same_seed_same_report) {
    const Result a = run_cli({"train", "--config", kExampleConfig, "--seed", "17", "--shots", "300"});
    const Result b = run_cli({"train", "--config", kExampleConfig, "--seed", "17", "--shots", "300"});
    ASSERT_EQ(a.code, cli::kOk);
    EXPECT_EQ(strip_volatile(a.out), strip_volatile(b.out));
    EXPECT_EQ(json::parse(a.out)["shots"], 300);
}

TEST(cli_train, seed_changes_histogram_of_spread_distribution) {
    // k = 0 leaves the weights uniform, so sampling depends on the seed.
    const Result a = run_cli({"train", "--config", kExampleConfig, "--iterations", "0", "--seed", "1"});
    const Result b = run_cli({"train", "--config", kExampleConfig, "--iterations", "0", "--seed", "2"});
    EXPECT_NE(json::parse(a.out)["histogram"], json::parse(b.out)["histogram"]);
}

TEST(cli_train, writes_report_file) {
    const auto path = std::filesystem::temp_directory_path() / "gqnn_cli_test" / "report.json";
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::remove(path);
    const Result r = run_cli({"train", "--config", kExampleConfig, "--out", path.string()});
    ASSERT_EQ(r.code, cli::kOk);
    std::ifstream in(path);
    EXPECT_EQ(json::parse(in)["status"], "ok");
}

TEST(cli_train, clashing_samples_are_named) {
    const std::string path = write_temp(
        "clash.json", single_synapse_config(3, 2, 4,
                                            R"([{"inputs": {"i1": 2}, "required": {"h1": 4}},
    {"inputs": {"i1": 1}, "required": {"h1": 3}},
    {"inputs": {"i1": 1}, "required": {"h1": 4}}])"));
    const Result r = run_cli({"train", "--config", path});
    EXPECT_EQ(r.code, cli::kNoSolution);
    const json report = json::parse(r.out);
    EXPECT_EQ(report["status"], "no_solution");
    ASSERT_EQ(report["conflicts"].size(), 1u);
    EXPECT_EQ(report["conflicts"][0]["samples"], json::array({1, 2}));
    EXPECT_EQ(report["conflicts"][0]["hidden"], "h1");
}

TEST(cli_train, overflow_only_match_is_not_verified) {
    const std::string path = write_temp(
        "overflow.json", single_synapse_config(2, 2, 2, R"([{"inputs": {"i1": 3}, "required": {"h1": 2}}])"));
    const Result r = run_cli({"train", "--config", path});
    EXPECT_EQ(r.code, cli::kMismatch);
    const json report = json::parse(r.out);
    EXPECT_EQ(report["status"], "no_verified_weight");
    ASSERT_EQ(report["unverified"].size(), 1u);
    EXPECT_EQ(report["accepted"][0]["weights"]["w1"], 2);
    EXPECT_FALSE(report["accepted"][0]["verified"].get<bool>());
}

TEST(cli_train, qubit_budget) {
    const std::string path = write_temp(
        "big.json", single_synapse_config(8, 8, 16, R"([{"inputs": {"i1": 3}, "required": {"h1": 6}}])"));
    const Result r = run_cli({"train", "--config", path});
    EXPECT_EQ(r.code, cli::kQubitBudget);
    EXPECT_EQ(json::parse(r.out)["status"], "qubit_budget_exceeded");
}

TEST(cli_verify, exit_codes) {
    const Result ok = run_cli({"verify", "--config", kExampleConfig, "--weights", "w1=2"});
    EXPECT_EQ(ok.code, cli::kOk);
    EXPECT_EQ(json::parse(ok.out)["rows"][0]["output"], 6);

    const Result bad = run_cli({"verify", "--config", kExampleConfig, "--weights", "w1=1"});
    EXPECT_EQ(bad.code, cli::kMismatch);
    EXPECT_EQ(json::parse(bad.out)["rows"][0]["output"], 3);

    EXPECT_EQ(run_cli({"verify", "--config", kExampleConfig, "--weights", "w1=9"}).code, cli::kBadInput);
    EXPECT_EQ(run_cli({"verify", "--config", kExampleConfig}).code, cli::kBadInput);
}

TEST(cli_verify, failing_sample_identified) {
    const std::string path = write_temp(
        "multi.json", single_synapse_config(3, 2, 4,
                                            R"([{"inputs": {"i1": 1}, "required": {"h1": 2}},
    {"inputs": {"i1": 3}, "required": {"h1": 7}},
    {"inputs": {"i1": 2}, "required": {"h1": 4}}])"));
    const Result r = run_cli({"verify", "--config", path, "--weights", "w1=2"});
    EXPECT_EQ(r.code, cli::kMismatch);
    const json report = json::parse(r.out);
    EXPECT_EQ(report["failing_samples"], json::array({1}));
    EXPECT_EQ(report["rows"][1]["output"], 6);
    EXPECT_EQ(report["rows"][1]["required"], 7);
}

TEST(cli_infer, prints_outputs) {
    const Result r = run_cli({"infer", "--config", kExampleConfig, "--weights", "w1=2", "--input", "i1=5"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("h1 = 10 (1010)"), std::string::npos) << r.out;

    const Result zero = run_cli({"infer", "--config", kExampleConfig, "--weights", "w1=0", "--input", "i1=7"});
    EXPECT_NE(zero.out.find("h1 = 0 (0000)"), std::string::npos) << zero.out;

    EXPECT_EQ(run_cli({"infer", "--config", kExampleConfig, "--weights", "w1=2", "--input", "i1=9"}).code,
              cli::kBadInput);
    EXPECT_EQ(run_cli({"infer", "--config", kExampleConfig, "--weights", "w1=2", "--input", "x=1"}).code,
              cli::kBadInput);
}

TEST(cli_export, json_training_circuit_simulates) {
    const Result r = run_cli({"export", "--config", kExampleConfig, "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const CircuitDocument doc = circuit_from_json(r.out);
    const std::vector<double> p = probabilities(simulate(doc.circuit), doc.layout.at("w1").range);
    EXPECT_NEAR(p[2], 1.0, 1e-9);
}

TEST(cli_export, qasm_and_errors) {
    const Result q = run_cli({"export", "--config", kExampleConfig, "--format", "qasm"});
    EXPECT_EQ(q.code, cli::kOk);
    EXPECT_TRUE(q.out.starts_with("OPENQASM 2.0;"));
    const Result f = run_cli({"export", "--config", kExampleConfig, "--what", "forward", "--weights", "w1=2"});
    EXPECT_EQ(f.code, cli::kOk);
    EXPECT_EQ(run_cli({"export", "--config", kExampleConfig, "--format", "xml"}).code, cli::kBadInput);
    EXPECT_EQ(run_cli({"export", "--config", kExampleConfig, "--what", "nothing"}).code, cli::kBadInput);
}

TEST(cli_args, bad_invocations) {
    EXPECT_EQ(run_cli({}).code, cli::kBadInput);
    EXPECT_EQ(run_cli({"fly"}).code, cli::kBadInput);
    EXPECT_EQ(run_cli({"train"}).code, cli::kBadInput);
    EXPECT_EQ(run_cli({"train", "--config", "/nonexistent/cfg.json"}).code, cli::kBadInput);
    EXPECT_EQ(run_cli({"train", "--config", kExampleConfig, "--shots", "0"}).code, cli::kBadInput);
}

TEST(config, error_names_field_and_line) {
    const std::string text = single_synapse_config(0, 2, 4, R"([{"inputs": {"i1": 3}, "required": {"h1": 6}}])");
    try {
        cli::parse_config(text, "cfg.json");
        FAIL();
    } catch (const cli::ConfigError &e) {
        EXPECT_EQ(std::string(e.what()), "cfg.json:3: /network/synapses/0/input_bits: 0 outside 1..20");
    }
    const std::string path = write_temp("zero_bits.json", text);
    const Result r = run_cli({"train", "--config", path});
    EXPECT_EQ(r.code, cli::kBadInput);
    EXPECT_NE(r.err.find("zero_bits.json:3: /network/synapses/0/input_bits"), std::string::npos) << r.err;
}

TEST(config, dataset_errors_point_at_sample) {
    const std::string text = single_synapse_config(3, 2, 4,
                                                   R"([{"inputs": {"i1": 3}, "required": {"h1": 6}},
    {"inputs": {"i1": 9}, "required": {"h1": 6}}])");
    try {
        cli::parse_config(text, "cfg.json");
        FAIL();
    } catch (const cli::ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("cfg.json:5: /dataset/1/inputs/i1"), std::string::npos) << e.what();
    }
}

TEST(config, policies_and_unknown_keys) {
    const std::string auto_text = R"({
  // product width derived from the operands
  "network": {"synapses": [{"input": "i1", "hidden": "h1", "weight": "w1", "input_bits": 3, "weight_bits": 2}]},
  "dataset": [{"inputs": {"i1": 3}, "required": {"h1": 6}}]
})";
    const cli::ExperimentConfig cfg = cli::parse_config(auto_text, "auto.json");
    EXPECT_EQ(cfg.network.synapses[0].product_bits, 5u);
    EXPECT_EQ(cfg.run.seed, 0u);
    EXPECT_EQ(cfg.run.shots, 1024u);

    std::string unknown = auto_text;
    unknown.replace(unknown.find("\"dataset\""), 0, "\"extra\": 1,\n  ");
    EXPECT_THROW(cli::parse_config(unknown, "u.json"), cli::ConfigError);

    // Explicit policy needs product_bits; auto policy forbids it.
    std::string explicit_missing = auto_text;
    explicit_missing.replace(explicit_missing.rfind('}'), 0, ",\n  \"run\": {\"product_bits_policy\": \"explicit\"}\n");
    EXPECT_THROW(cli::parse_config(explicit_missing, "e.json"), cli::ConfigError);
    const std::string auto_with_bits =
        single_synapse_config(3, 2, 4, R"([{"inputs": {"i1": 3}, "required": {"h1": 6}}])");
    std::string forced_auto = auto_with_bits;
    forced_auto.replace(forced_auto.find("explicit"), 8, "auto");
    EXPECT_THROW(cli::parse_config(forced_auto, "a.json"), cli::ConfigError);
}

TEST(config, assignments) {
    const Assignment a = cli::parse_assignment("w1=2, w2=3", "--weights");
    EXPECT_EQ(a.at("w1"), 2u);
    EXPECT_EQ(a.at("w2"), 3u);
    EXPECT_THROW(cli::parse_assignment("w1", "--weights"), cli::ConfigError);
    EXPECT_THROW(cli::parse_assignment("w1=x", "--weights"), cli::ConfigError);
    EXPECT_THROW(cli::parse_assignment("w1=1,w1=2", "--weights"), cli::ConfigError);
}
