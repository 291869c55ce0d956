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
/// Feature map, layered ansatz and the forward pass that records a tape.
///
/// The circuit applied to |0...0> is
///
///   U_loc(l) U_ent ... U_loc(1) U_ent U_loc(0) U_in(x)
///
/// where U_in and every U_loc apply R_Y then R_Z on each qubit and U_ent is
/// the CZ ring (j, j+1 mod n) for j = 0..n-1 in ascending order.
///
/// Parameter layout: layer-major, then qubit-major, then (Y, Z).

#include <cstddef>
#include <span>
#include <vector>

#include "qcbp/gates.hpp"
#include "qcbp/state.hpp"

namespace qcbp {

/// Topology of the variational circuit.
struct AnsatzSpec {
    unsigned n_qubits{1};
    /// Number of entangler layers; there are depth + 1 rotation layers.
    unsigned depth{0};
    /// Length of each input vector (1 or 2).
    unsigned feature_dim{1};

    bool operator==(const AnsatzSpec &) const = default;

    /// Throws DomainError when the topology is not buildable.
    void validate() const;
};

/// 2 * n_qubits * (depth + 1).
std::size_t param_count(const AnsatzSpec &spec);

/// Position of the (layer, qubit, axis) angle inside a parameter vector.
constexpr std::size_t param_index(const AnsatzSpec &spec, unsigned layer,
                                  unsigned qubit, RotationAxis axis) {
    return (static_cast<std::size_t>(layer) * spec.n_qubits + qubit) * 2 +
           (axis == RotationAxis::Y ? 0 : 1);
}

/// Learnable rotation angles in radians.
struct ParameterVector {
    std::vector<double> values;

    ParameterVector() = default;
    explicit ParameterVector(std::vector<double> v) : values(std::move(v)) {}

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    double &operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    bool operator==(const ParameterVector &) const = default;
};

/// Throws DomainError if `theta` does not fit `spec` or holds non-finite values.
void check_parameters(const ParameterVector &theta, const AnsatzSpec &spec);

/// One step of the circuit that the tape records a state after.
struct GateGroup {
    enum class Kind { Rotation, Entangler };
    Kind kind{Kind::Rotation};
    unsigned layer{0};
    RotationAxis axis{RotationAxis::Y};

    bool operator==(const GateGroup &) const = default;
};

/// Ordered gate groups of W(theta): per layer an R_Y sub-layer and an R_Z
/// sub-layer, with an entangler before every layer except the first.
std::vector<GateGroup> gate_groups(const AnsatzSpec &spec);

/// Rotation angles (theta_Y, theta_Z) that encode one input coordinate:
/// (asin(x), acos(x^2)).
struct EncodingAngles {
    double y;
    double z;
};
EncodingAngles encoding_angles(double x);

/// U_in(x)|0...0>. With two features, even qubits take x[0] and odd qubits
/// take x[1]; with one feature every qubit takes x[0].
QuantumState encode_input(std::span<const double> x, const AnsatzSpec &spec);

/// In-place CZ ring. Registers with fewer than two qubits are left untouched.
void apply_entangler(QuantumState &state);
QuantumState entangler_layer(QuantumState state);

/// Applies one gate group in place.
void apply_group(QuantumState &state, const GateGroup &group,
                 const ParameterVector &theta, const AnsatzSpec &spec);

/// An ansatz bound to one parameter vector, with every rotation matrix
/// evaluated once. Many samples can then be simulated against it.
struct CompiledAnsatz {
    AnsatzSpec spec;
    ParameterVector theta;
    std::vector<GateGroup> groups;
    /// gates[m] is the rotation for parameter m.
    std::vector<GateMatrix2> gates;

    CompiledAnsatz(const AnsatzSpec &spec, ParameterVector theta);
};

/// Cached states of one forward pass.
struct ForwardTape {
    AnsatzSpec spec;
    ParameterVector theta;
    std::vector<GateGroup> groups;
    QuantumState encoded_state;
    /// post_group_states[g] is the state right after groups[g].
    std::vector<QuantumState> post_group_states;

    [[nodiscard]] const QuantumState &final_state() const {
        return post_group_states.back();
    }
    /// State entering group g.
    [[nodiscard]] const QuantumState &input_of(std::size_t g) const {
        return g == 0 ? encoded_state : post_group_states[g - 1];
    }
};

ForwardTape forward(std::span<const double> x, const ParameterVector &theta,
                    const AnsatzSpec &spec);
ForwardTape forward(std::span<const double> x, const CompiledAnsatz &circuit);

/// Final state only; no intermediate copies are kept.
QuantumState simulate(std::span<const double> x, const ParameterVector &theta,
                      const AnsatzSpec &spec);
QuantumState simulate(std::span<const double> x, const CompiledAnsatz &circuit);

} // namespace qcbp
