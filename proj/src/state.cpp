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
#include "qcbp/state.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qcbp/error.hpp"
#include "qcbp/kernels.hpp"

namespace qcbp {

namespace {

void check_register_size(unsigned n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw DomainError("n_qubits must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n_qubits));
    }
}

} // namespace

QuantumState::QuantumState(unsigned n_qubits)
    : n_qubits_(n_qubits), amplitudes_() {
    check_register_size(n_qubits);
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
    amplitudes_[0] = Complex{1.0, 0.0};
}

QuantumState::QuantumState(unsigned n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes,
                                           double norm_tolerance) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DomainError("amplitude count must be a power of two >= 2, got " +
                          std::to_string(dim));
    }
    const auto n = static_cast<unsigned>(std::countr_zero(dim));
    check_register_size(n);
    QuantumState state(n, std::move(amplitudes));
    const double norm = state.norm_squared();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > norm_tolerance) {
        throw DomainError("amplitudes are not unit norm (|psi|^2 = " +
                          std::to_string(norm) + ")");
    }
    return state;
}

void QuantumState::check_qubit(QubitIndex q) const {
    if (q.value >= n_qubits_) {
        throw DomainError("qubit index " + std::to_string(q.value) +
                          " out of range for " + std::to_string(n_qubits_) +
                          " qubits");
    }
}

void QuantumState::apply(const GateMatrix2 &gate, QubitIndex target) {
    check_qubit(target);
    kernels::parallel::apply_1q(amplitudes_, gate, target.value);
}

void QuantumState::apply_cz(QubitIndex control, QubitIndex target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw DomainError("CZ control and target must differ");
    }
    kernels::parallel::apply_cz(amplitudes_, control.value, target.value);
}

double QuantumState::norm_squared() const noexcept {
    const auto m = kernels::parallel::marginal(amplitudes_, 0);
    return m[0] + m[1];
}

QuantumState basis_state(unsigned n_qubits, std::size_t index) {
    QuantumState state(n_qubits);
    if (index >= state.dim()) {
        throw DomainError("basis index " + std::to_string(index) +
                          " out of range for " + std::to_string(n_qubits) +
                          " qubits");
    }
    if (index == 0) {
        return state;
    }
    std::vector<Complex> amps(state.dim(), Complex{});
    amps[index] = Complex{1.0, 0.0};
    return QuantumState::from_amplitudes(std::move(amps));
}

QuantumState apply_single_qubit(QuantumState state, const GateMatrix2 &gate,
                                QubitIndex target) {
    state.apply(gate, target);
    return state;
}

QuantumState apply_cz(QuantumState state, QubitIndex control,
                      QubitIndex target) {
    state.apply_cz(control, target);
    return state;
}

std::vector<double> probabilities(const QuantumState &state) {
    std::vector<double> out(state.dim());
    kernels::parallel::probabilities(state.amplitudes(), out);
    return out;
}

Marginal marginal(const QuantumState &state, QubitIndex qubit) {
    if (qubit.value >= state.n_qubits()) {
        throw DomainError("qubit index out of range");
    }
    const auto m = kernels::parallel::marginal(state.amplitudes(), qubit.value);
    return Marginal{m[0], m[1]};
}

double z_expectation(const QuantumState &state, QubitIndex qubit) {
    const Marginal m = marginal(state, qubit);
    return m.p0 - m.p1;
}

std::string basis_label(std::size_t index, unsigned n_qubits) {
    std::string label(n_qubits, '0');
    for (unsigned q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1U) {
            label[n_qubits - 1 - q] = '1';
        }
    }
    return label;
}

} // namespace qcbp
