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
#include "qcbp/kernels.hpp"

#include <complex>

#include "kernel_ops.hpp"

namespace qcbp::kernels::serial {

void apply_1q(std::span<Complex> amps, const GateMatrix2 &gate,
              unsigned target) {
    const std::size_t pairs = amps.size() / 2;
    for (std::size_t k = 0; k < pairs; ++k) {
        detail::apply_pair(amps, gate, k, target);
    }
}

void apply_cz(std::span<Complex> amps, unsigned q0, unsigned q1) {
    const unsigned lo = q0 < q1 ? q0 : q1;
    const unsigned hi = q0 < q1 ? q1 : q0;
    const std::size_t quads = amps.size() / 4;
    for (std::size_t k = 0; k < quads; ++k) {
        detail::negate_quad(amps, k, lo, hi);
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    for (std::size_t j = 0; j < amps.size(); ++j) {
        out[j] = std::norm(amps[j]);
    }
}

std::array<double, 2> marginal(std::span<const Complex> amps, unsigned qubit) {
    std::array<double, 2> sums{0.0, 0.0};
    for (std::size_t j = 0; j < amps.size(); ++j) {
        sums[(j >> qubit) & 1U] += std::norm(amps[j]);
    }
    return sums;
}

double bilinear_re(std::span<const Complex> cot, std::span<const Complex> state,
                   const GateMatrix2 &gate, unsigned target) {
    double acc = 0.0;
    const std::size_t pairs = state.size() / 2;
    for (std::size_t k = 0; k < pairs; ++k) {
        acc += detail::bilinear_pair(cot, state, gate, k, target);
    }
    return acc;
}

void weighted_conj(std::span<const double> weights,
                   std::span<const Complex> state, std::span<Complex> out) {
    for (std::size_t j = 0; j < state.size(); ++j) {
        out[j] = weights[j] * std::conj(state[j]);
    }
}

} // namespace qcbp::kernels::serial
