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
#include "qcbp/cli/csv.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qcbp/error.hpp"

namespace qcbp::cli {

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    return fmt::format("{}", value);
}

CsvWriter::CsvWriter(const std::filesystem::path &path,
                     std::initializer_list<std::string_view> header)
    : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    bool first = true;
    for (std::string_view h : header) {
        out_ << (first ? "" : ",") << h;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        out_ << (first ? "" : ",") << format_number(v);
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out_ << (i == 0 ? "" : ",") << fields[i];
    }
    out_ << '\n';
}

} // namespace qcbp::cli
