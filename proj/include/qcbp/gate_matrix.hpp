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

#include <array>
#include <complex>
#include <cstddef>

namespace qcbp {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix acting on a single qubit.
struct GateMatrix2 {
    std::array<Complex, 4> entries{};

    constexpr Complex &operator()(std::size_t row, std::size_t col) {
        return entries[2 * row + col];
    }
    constexpr const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries[2 * row + col];
    }

    bool operator==(const GateMatrix2 &) const = default;

    static constexpr GateMatrix2 identity() {
        return GateMatrix2{{Complex{1.0, 0.0}, Complex{}, Complex{}, Complex{1.0, 0.0}}};
    }
};

GateMatrix2 operator*(const GateMatrix2 &lhs, const GateMatrix2 &rhs);
GateMatrix2 operator-(const GateMatrix2 &lhs, const GateMatrix2 &rhs);
GateMatrix2 operator*(double scale, const GateMatrix2 &m);

/// Conjugate transpose.
GateMatrix2 adjoint(const GateMatrix2 &m);
/// Plain transpose (no conjugation).
GateMatrix2 transpose(const GateMatrix2 &m);
/// Largest entrywise modulus of the difference.
double max_abs_diff(const GateMatrix2 &lhs, const GateMatrix2 &rhs);

} // namespace qcbp
