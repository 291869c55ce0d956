// Copyright 2026 The qcbp Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcbp/cli/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qcbp::cli {

nlohmann::json RunManifest::to_json() const {
    return nlohmann::json{{"command", command},     {"config", config},
                          {"seeds", seeds},         {"artifacts", artifacts},
                          {"version", version},     {"timestamp", timestamp}};
}

RunManifest RunManifest::from_json(const nlohmann::json &j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.config = j.at("config");
    m.seeds = j.value("seeds", nlohmann::json::object());
    m.artifacts = j.value("artifacts", std::vector<std::string>{});
    m.version = j.value("version", std::string{});
    m.timestamp = j.value("timestamp", std::string{});
    return m;
}

void RunManifest::write(const std::filesystem::path &path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << to_json().dump(2) << '\n';
}

RunManifest RunManifest::read(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read manifest " + path.string());
    }
    return from_json(nlohmann::json::parse(in));
}

std::vector<std::string> RunManifest::replay_args() const {
    std::vector<std::string> args{command};
    for (const auto &[key, value] : config.items()) {
        if (key == "out-dir") {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                args.push_back("--" + key);
            }
            continue;
        }
        args.push_back("--" + key);
        if (value.is_string()) {
            args.push_back(value.get<std::string>());
        } else if (value.is_number_float()) {
            args.push_back(fmt::format("{}", value.get<double>()));
        } else {
            args.push_back(value.dump());
        }
    }
    return args;
}

std::string iso8601_now() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string version_string() { return QCBP_VERSION_STRING; }

} // namespace qcbp::cli
