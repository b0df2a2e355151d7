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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gqnn/qnn.h"

namespace gqnn::cli {

enum class ProductBitsPolicy {
    /// product_bits = input_bits + weight_bits, which rules out overflow.
    Auto,
    /// product_bits must be given per synapse.
    Explicit,
};

struct RunSettings {
    std::uint64_t seed = 0;
    std::uint64_t shots = 1024;
    std::optional<std::uint64_t> iterations;
    ProductBitsPolicy product_bits_policy = ProductBitsPolicy::Auto;
    AdderKind adder = AdderKind::RippleCarry;
};

struct ExperimentConfig {
    NetworkSpec network;
    Dataset dataset;
    RunSettings run;
};

/// Raised for any config problem. The message names the offending field as a
/// JSON pointer and, when it can be located, its line in the source text.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses and validates a config document. `//` and `/* */` comments are
/// accepted. `source` is used as the message prefix.
ExperimentConfig parse_config(std::string_view text, std::string_view source = "config");
ExperimentConfig load_config(const std::string &path);

/// Parses "name=value,name=value". Throws ConfigError on malformed text.
Assignment parse_assignment(std::string_view text, std::string_view what);

}  // namespace gqnn::cli
