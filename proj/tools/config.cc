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

#include "config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace gqnn::cli {

namespace {

using nlohmann::json;

std::string escape_pointer_token(std::string_view key) {
    std::string out;
    for (char c : key) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

// Line (1-based) on which each value starts, keyed by JSON pointer. The
// document is assumed to be syntactically valid; nlohmann has already
// accepted it.
class LineIndex {
   public:
    explicit LineIndex(std::string_view text) { scan(text); }

    /// Line of `pointer`, or of its closest recorded ancestor.
    int line_of(std::string pointer) const {
        while (true) {
            auto it = lines_.find(pointer);
            if (it != lines_.end()) return it->second;
            const auto slash = pointer.rfind('/');
            if (slash == std::string::npos) return 0;
            pointer.resize(slash);
        }
    }

   private:
    struct Frame {
        bool array = false;
        bool expect_key = false;
        std::string key;
        std::size_t index = 0;
        std::string path;
    };

    std::string current_path() const {
        if (stack_.empty()) return "";
        const Frame &f = stack_.back();
        return f.path + "/" + (f.array ? std::to_string(f.index) : escape_pointer_token(f.key));
    }

    void scan(std::string_view s) {
        int line = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const char c = s[i];
            if (c == '\n') {
                ++line;
            } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
                while (i + 1 < s.size() && s[i + 1] != '\n') ++i;
            } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
                i += 2;
                while (i + 1 < s.size() && !(s[i] == '*' && s[i + 1] == '/')) {
                    if (s[i] == '\n') ++line;
                    ++i;
                }
                ++i;
            } else if (c == '{' || c == '[') {
                const std::string path = current_path();
                lines_.emplace(path, line);
                stack_.push_back({c == '[', c == '{', "", 0, path});
            } else if (c == '}' || c == ']') {
                stack_.pop_back();
            } else if (c == ',') {
                if (!stack_.empty()) {
                    if (stack_.back().array) {
                        ++stack_.back().index;
                    } else {
                        stack_.back().expect_key = true;
                    }
                }
            } else if (c == '"') {
                std::string str;
                for (++i; i < s.size() && s[i] != '"'; ++i) {
                    if (s[i] == '\\' && i + 1 < s.size()) ++i;
                    str += s[i];
                }
                if (!stack_.empty() && !stack_.back().array && stack_.back().expect_key) {
                    stack_.back().key = std::move(str);
                    stack_.back().expect_key = false;
                } else {
                    lines_.emplace(current_path(), line);
                }
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
                lines_.emplace(current_path(), line);
                while (i + 1 < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '.' || s[i + 1] == '+' ||
                        s[i + 1] == '-')) {
                    ++i;
                }
            }
        }
    }

    std::vector<Frame> stack_;
    std::map<std::string, int> lines_;
};

// Maps a core validation field ("synapses[0].input_bits",
// "dataset[1].inputs.i1") to a JSON pointer into the config document.
std::string pointer_from_field(std::string_view field) {
    std::string out;
    if (field.starts_with("synapses")) out = "/network";
    std::string token;
    auto flush = [&] {
        if (!token.empty()) out += "/" + escape_pointer_token(token);
        token.clear();
    };
    for (char c : field) {
        if (c == '.' || c == '[' || c == ']') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    return out;
}

class Reader {
   public:
    Reader(std::string_view text, std::string_view source) : index_(text), source_(source) {}

    [[noreturn]] void fail(const std::string &pointer, const std::string &message) const {
        std::ostringstream msg;
        msg << source_;
        if (const int line = index_.line_of(pointer); line > 0) msg << ':' << line;
        msg << ": " << (pointer.empty() ? "/" : pointer) << ": " << message;
        throw ConfigError(msg.str());
    }

    const json &member(const json &obj, const std::string &ptr, const char *key) const {
        if (!obj.is_object()) fail(ptr, "expected an object");
        if (!obj.contains(key)) fail(ptr + "/" + key, "missing required field");
        return obj.at(key);
    }

    std::uint64_t unsigned_value(const json &j, const std::string &ptr) const {
        if (!j.is_number_unsigned()) fail(ptr, "expected a non-negative integer");
        return j.get<std::uint64_t>();
    }

    std::string string_value(const json &j, const std::string &ptr) const {
        if (!j.is_string()) fail(ptr, "expected a string");
        return j.get<std::string>();
    }

    Assignment assignment(const json &j, const std::string &ptr) const {
        if (!j.is_object()) fail(ptr, "expected an object of name: value pairs");
        Assignment out;
        for (const auto &[name, value] : j.items()) {
            out[name] = unsigned_value(value, ptr + "/" + escape_pointer_token(name));
        }
        return out;
    }

    void check_keys(const json &obj, const std::string &ptr, std::initializer_list<std::string_view> known) const {
        for (const auto &[key, value] : obj.items()) {
            if (std::find(known.begin(), known.end(), key) == known.end()) {
                fail(ptr + "/" + escape_pointer_token(key), "unknown field");
            }
        }
    }

   private:
    LineIndex index_;
    std::string source_;
};

}  // namespace

ExperimentConfig parse_config(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string(source) + ": " + e.what());
    }
    const Reader r(text, source);
    ExperimentConfig cfg;
    if (!doc.is_object()) r.fail("", "expected an object");
    r.check_keys(doc, "", {"network", "dataset", "run"});

    if (doc.contains("run")) {
        const json &run = doc["run"];
        if (!run.is_object()) r.fail("/run", "expected an object");
        r.check_keys(run, "/run", {"seed", "shots", "iterations", "product_bits_policy", "adder"});
        if (run.contains("seed")) cfg.run.seed = r.unsigned_value(run["seed"], "/run/seed");
        if (run.contains("shots")) {
            cfg.run.shots = r.unsigned_value(run["shots"], "/run/shots");
            if (cfg.run.shots == 0) r.fail("/run/shots", "must be at least 1");
        }
        if (run.contains("iterations") && !run["iterations"].is_null()) {
            cfg.run.iterations = r.unsigned_value(run["iterations"], "/run/iterations");
        }
        if (run.contains("product_bits_policy")) {
            const std::string policy = r.string_value(run["product_bits_policy"], "/run/product_bits_policy");
            if (policy == "auto") {
                cfg.run.product_bits_policy = ProductBitsPolicy::Auto;
            } else if (policy == "explicit") {
                cfg.run.product_bits_policy = ProductBitsPolicy::Explicit;
            } else {
                r.fail("/run/product_bits_policy", "expected \"auto\" or \"explicit\", got \"" + policy + "\"");
            }
        }
        if (run.contains("adder")) {
            const std::string adder = r.string_value(run["adder"], "/run/adder");
            if (adder == "ripple-carry") {
                cfg.run.adder = AdderKind::RippleCarry;
            } else if (adder == "increment") {
                cfg.run.adder = AdderKind::Increment;
            } else {
                r.fail("/run/adder", "expected \"ripple-carry\" or \"increment\", got \"" + adder + "\"");
            }
        }
    }

    const json &network = r.member(doc, "", "network");
    if (!network.is_object()) r.fail("/network", "expected an object");
    r.check_keys(network, "/network", {"synapses", "activation"});
    if (network.contains("activation")) {
        const std::string act = r.string_value(network["activation"], "/network/activation");
        if (act != "identity") r.fail("/network/activation", "only \"identity\" is supported, got \"" + act + "\"");
    }
    const json &synapses = r.member(network, "/network", "synapses");
    if (!synapses.is_array()) r.fail("/network/synapses", "expected an array");
    for (std::size_t k = 0; k < synapses.size(); ++k) {
        const std::string ptr = "/network/synapses/" + std::to_string(k);
        const json &js = synapses[k];
        if (!js.is_object()) r.fail(ptr, "expected an object");
        r.check_keys(js, ptr, {"input", "hidden", "weight", "input_bits", "weight_bits", "product_bits"});
        Synapse s;
        s.input = r.string_value(r.member(js, ptr, "input"), ptr + "/input");
        s.hidden = r.string_value(r.member(js, ptr, "hidden"), ptr + "/hidden");
        s.weight = r.string_value(r.member(js, ptr, "weight"), ptr + "/weight");
        s.input_bits = r.unsigned_value(r.member(js, ptr, "input_bits"), ptr + "/input_bits");
        s.weight_bits = r.unsigned_value(r.member(js, ptr, "weight_bits"), ptr + "/weight_bits");
        if (cfg.run.product_bits_policy == ProductBitsPolicy::Explicit) {
            s.product_bits = r.unsigned_value(r.member(js, ptr, "product_bits"), ptr + "/product_bits");
        } else if (js.contains("product_bits")) {
            r.fail(ptr + "/product_bits", "not allowed with product_bits_policy \"auto\"");
        } else {
            s.product_bits = s.input_bits + s.weight_bits;
        }
        cfg.network.synapses.push_back(std::move(s));
    }

    const json &dataset = r.member(doc, "", "dataset");
    if (!dataset.is_array()) r.fail("/dataset", "expected an array");
    if (dataset.empty()) r.fail("/dataset", "at least one training sample is required");
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const std::string ptr = "/dataset/" + std::to_string(i);
        const json &js = dataset[i];
        if (!js.is_object()) r.fail(ptr, "expected an object");
        r.check_keys(js, ptr, {"inputs", "required"});
        TrainingSample sample;
        sample.inputs = r.assignment(r.member(js, ptr, "inputs"), ptr + "/inputs");
        sample.required = r.assignment(r.member(js, ptr, "required"), ptr + "/required");
        cfg.dataset.push_back(std::move(sample));
    }

    try {
        validate_dataset(cfg.network, cfg.dataset);
    } catch (const std::invalid_argument &e) {
        const std::string_view msg = e.what();
        const auto colon = msg.find(": ");
        if (colon == std::string_view::npos) throw ConfigError(std::string(source) + ": " + std::string(msg));
        r.fail(pointer_from_field(msg.substr(0, colon)), std::string(msg.substr(colon + 2)));
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

Assignment parse_assignment(std::string_view text, std::string_view what) {
    Assignment out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ConfigError(std::string(what) + ": expected name=value, got '" + std::string(item) + "'");
        }
        const std::string name(item.substr(0, eq));
        const std::string_view digits = item.substr(eq + 1);
        std::uint64_t value = 0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
            throw ConfigError(std::string(what) + ": '" + std::string(digits) + "' is not a non-negative integer");
        }
        if (!out.emplace(name, value).second) {
            throw ConfigError(std::string(what) + ": '" + name + "' given twice");
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace gqnn::cli
