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

// Per-element operations shared by the serial and parallel kernels so both
// perform the same floating-point sequence.

#include <cstddef>
#include <span>

#include "qcbp/gate_matrix.hpp"
#include "qcbp/kernels.hpp"

namespace qcbp::kernels::detail {

inline void apply_pair(std::span<Complex> amps, const GateMatrix2 &g,
                       std::size_t k, unsigned target) {
    const std::size_t j0 = insert_zero_bit(k, target);
    const std::size_t j1 = j0 | (std::size_t{1} << target);
    const Complex v0 = amps[j0];
    const Complex v1 = amps[j1];
    amps[j0] = g(0, 0) * v0 + g(0, 1) * v1;
    amps[j1] = g(1, 0) * v0 + g(1, 1) * v1;
}

inline void negate_quad(std::span<Complex> amps, std::size_t k, unsigned lo,
                        unsigned hi) {
    const std::size_t j = insert_zero_bit(insert_zero_bit(k, lo), hi) |
                          (std::size_t{1} << lo) | (std::size_t{1} << hi);
    amps[j] = -amps[j];
}

inline double bilinear_pair(std::span<const Complex> cot,
                            std::span<const Complex> state,
                            const GateMatrix2 &g, std::size_t k,
                            unsigned target) {
    const std::size_t j0 = insert_zero_bit(k, target);
    const std::size_t j1 = j0 | (std::size_t{1} << target);
    const Complex s0 = state[j0];
    const Complex s1 = state[j1];
    const Complex out0 = g(0, 0) * s0 + g(0, 1) * s1;
    const Complex out1 = g(1, 0) * s0 + g(1, 1) * s1;
    return (cot[j0] * out0).real() + (cot[j1] * out1).real();
}

} // namespace qcbp::kernels::detail
