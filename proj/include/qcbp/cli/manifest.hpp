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
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcbp::cli {

/// Record written next to every command's outputs. `config` holds every
/// option of the command with its effective value, so the run can be
/// repeated from the manifest alone.
struct RunManifest {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json seeds = nlohmann::json::object();
    std::vector<std::string> artifacts;
    std::string version;
    std::string timestamp;

    [[nodiscard]] nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json &j);

    void write(const std::filesystem::path &path) const;
    static RunManifest read(const std::filesystem::path &path);

    /// Command-line arguments that reproduce the run, subcommand first.
    /// The out-dir option is left out.
    [[nodiscard]] std::vector<std::string> replay_args() const;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string iso8601_now();

/// Library version string.
std::string version_string();

} // namespace qcbp::cli
