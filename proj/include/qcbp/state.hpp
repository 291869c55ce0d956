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

/// @file
/// Dense statevector and the measurement quantities built on it.
///
/// Bit convention: qubit q occupies bit q of a basis index. When an index is
/// rendered as a bitstring, qubit 0 is the LAST (rightmost) character, so
/// "the first qubit" is the least significant bit. Under this rendering the
/// 3-qubit states 001, 011, 101 and 111 form the group in which the first
/// qubit reads 1.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcbp/gate_matrix.hpp"

namespace qcbp {

/// Index of a qubit inside a register. Validated against a state on use.
struct QubitIndex {
    unsigned value{};

    constexpr QubitIndex() = default;
    constexpr explicit QubitIndex(unsigned v) : value(v) {}
    bool operator==(const QubitIndex &) const = default;
};

/// Upper bound on register size accepted by QuantumState.
inline constexpr unsigned kMaxQubits = 30;
/// Tolerance for norm and probability checks.
inline constexpr double kNormTolerance = 1e-12;

/// Length-2^n vector of complex amplitudes with unit norm.
class QuantumState {
  public:
    /// The all-zero basis state |0...0>.
    explicit QuantumState(unsigned n_qubits);

    /// Wraps caller-provided amplitudes. The length must be a power of two
    /// (at least 2) and the squared norm must be 1 within `norm_tolerance`.
    static QuantumState from_amplitudes(std::vector<Complex> amplitudes,
                                        double norm_tolerance = 1e-10);

    [[nodiscard]] unsigned n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t j) const {
        return amplitudes_[j];
    }

    /// In-place single-qubit gate on `target`.
    void apply(const GateMatrix2 &gate, QubitIndex target);
    /// In-place controlled-Z between two distinct qubits.
    void apply_cz(QubitIndex control, QubitIndex target);

    [[nodiscard]] double norm_squared() const noexcept;

    bool operator==(const QuantumState &) const = default;

  private:
    QuantumState(unsigned n_qubits, std::vector<Complex> amplitudes);
    void check_qubit(QubitIndex q) const;

    unsigned n_qubits_;
    std::vector<Complex> amplitudes_;
};

QuantumState basis_state(unsigned n_qubits, std::size_t index);

QuantumState apply_single_qubit(QuantumState state, const GateMatrix2 &gate,
                                QubitIndex target);
QuantumState apply_cz(QuantumState state, QubitIndex control, QubitIndex target);

std::vector<double> probabilities(const QuantumState &state);

struct Marginal {
    double p0;
    double p1;
};

/// Probability of reading `qubit` as 0 and as 1.
Marginal marginal(const QuantumState &state, QubitIndex qubit);

/// <Z> on `qubit`, i.e. p0 - p1.
double z_expectation(const QuantumState &state, QubitIndex qubit);

/// Value (0 or 1) of `qubit` in basis index `index`.
constexpr unsigned bit_of(std::size_t index, QubitIndex qubit) {
    return static_cast<unsigned>((index >> qubit.value) & 1U);
}

/// Bitstring of `index` over `n_qubits`, qubit 0 rightmost.
std::string basis_label(std::size_t index, unsigned n_qubits);

} // namespace qcbp
