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
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qcbp::cli {

/// Shortest decimal text that reads back to the same double. Always uses '.'
/// and never groups digits.
std::string format_number(double value);

/// Comma-separated file with a header row and LF line endings.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path &path,
              std::initializer_list<std::string_view> header);

    void row(std::initializer_list<double> values);
    void row(const std::vector<std::string> &fields);

  private:
    std::ofstream out_;
};

} // namespace qcbp::cli
