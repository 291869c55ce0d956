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
#include "qcbp/circuit.hpp"

#include <cmath>
#include <string>

#include "qcbp/error.hpp"

namespace qcbp {

void AnsatzSpec::validate() const {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw DomainError("ansatz needs between 1 and " +
                          std::to_string(kMaxQubits) + " qubits");
    }
    if (feature_dim != 1 && feature_dim != 2) {
        throw DomainError("feature_dim must be 1 or 2, got " +
                          std::to_string(feature_dim));
    }
    if (feature_dim == 2 && n_qubits < 2) {
        throw DomainError("two input features need at least two qubits");
    }
}

std::size_t param_count(const AnsatzSpec &spec) {
    return 2 * static_cast<std::size_t>(spec.n_qubits) * (spec.depth + 1);
}

void check_parameters(const ParameterVector &theta, const AnsatzSpec &spec) {
    if (theta.size() != param_count(spec)) {
        throw DomainError("expected " + std::to_string(param_count(spec)) +
                          " parameters, got " + std::to_string(theta.size()));
    }
    for (double v : theta.values) {
        if (!std::isfinite(v)) {
            throw DomainError("parameter vector holds a non-finite angle");
        }
    }
}

std::vector<GateGroup> gate_groups(const AnsatzSpec &spec) {
    std::vector<GateGroup> groups;
    groups.reserve(3 * spec.depth + 2);
    for (unsigned layer = 0; layer <= spec.depth; ++layer) {
        if (layer > 0) {
            groups.push_back({GateGroup::Kind::Entangler, layer, RotationAxis::Y});
        }
        groups.push_back({GateGroup::Kind::Rotation, layer, RotationAxis::Y});
        groups.push_back({GateGroup::Kind::Rotation, layer, RotationAxis::Z});
    }
    return groups;
}

EncodingAngles encoding_angles(double x) {
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("input coordinate " + std::to_string(x) +
                          " lies outside [-1, 1]");
    }
    return EncodingAngles{std::asin(x), std::acos(x * x)};
}

QuantumState encode_input(std::span<const double> x, const AnsatzSpec &spec) {
    spec.validate();
    if (x.size() != spec.feature_dim) {
        throw DomainError("input has " + std::to_string(x.size()) +
                          " features, ansatz expects " +
                          std::to_string(spec.feature_dim));
    }
    const EncodingAngles first = encoding_angles(x[0]);
    const EncodingAngles second = spec.feature_dim == 2 ? encoding_angles(x[1]) : first;

    QuantumState state(spec.n_qubits);
    for (unsigned q = 0; q < spec.n_qubits; ++q) {
        const EncodingAngles &a = (q % 2 == 0) ? first : second;
        state.apply(ry(a.y), QubitIndex{q});
        state.apply(rz(a.z), QubitIndex{q});
    }
    return state;
}

void apply_entangler(QuantumState &state) {
    const unsigned n = state.n_qubits();
    if (n < 2) {
        return;
    }
    for (unsigned j = 0; j < n; ++j) {
        state.apply_cz(QubitIndex{j}, QubitIndex{(j + 1) % n});
    }
}

QuantumState entangler_layer(QuantumState state) {
    apply_entangler(state);
    return state;
}

namespace {

void apply_compiled_group(QuantumState &state, const GateGroup &group,
                          const CompiledAnsatz &circuit) {
    if (group.kind == GateGroup::Kind::Entangler) {
        apply_entangler(state);
        return;
    }
    for (unsigned q = 0; q < circuit.spec.n_qubits; ++q) {
        const std::size_t m = param_index(circuit.spec, group.layer, q, group.axis);
        state.apply(circuit.gates[m], QubitIndex{q});
    }
}

} // namespace

CompiledAnsatz::CompiledAnsatz(const AnsatzSpec &spec_, ParameterVector theta_)
    : spec(spec_), theta(std::move(theta_)), groups(gate_groups(spec_)) {
    spec.validate();
    check_parameters(theta, spec);
    gates.resize(theta.size());
    for (unsigned layer = 0; layer <= spec.depth; ++layer) {
        for (unsigned q = 0; q < spec.n_qubits; ++q) {
            for (RotationAxis axis : {RotationAxis::Y, RotationAxis::Z}) {
                const std::size_t m = param_index(spec, layer, q, axis);
                gates[m] = rotation(axis, theta[m]);
            }
        }
    }
}

void apply_group(QuantumState &state, const GateGroup &group,
                 const ParameterVector &theta, const AnsatzSpec &spec) {
    if (group.kind == GateGroup::Kind::Entangler) {
        apply_entangler(state);
        return;
    }
    for (unsigned q = 0; q < spec.n_qubits; ++q) {
        const double angle = theta[param_index(spec, group.layer, q, group.axis)];
        state.apply(rotation(group.axis, angle), QubitIndex{q});
    }
}

ForwardTape forward(std::span<const double> x, const ParameterVector &theta,
                    const AnsatzSpec &spec) {
    return forward(x, CompiledAnsatz(spec, theta));
}

ForwardTape forward(std::span<const double> x, const CompiledAnsatz &circuit) {
    QuantumState encoded = encode_input(x, circuit.spec);
    std::vector<QuantumState> states;
    states.reserve(circuit.groups.size());
    QuantumState current = encoded;
    for (const GateGroup &group : circuit.groups) {
        apply_compiled_group(current, group, circuit);
        states.push_back(current);
    }
    return ForwardTape{circuit.spec, circuit.theta, circuit.groups,
                       std::move(encoded), std::move(states)};
}

QuantumState simulate(std::span<const double> x, const ParameterVector &theta,
                      const AnsatzSpec &spec) {
    return simulate(x, CompiledAnsatz(spec, theta));
}

QuantumState simulate(std::span<const double> x, const CompiledAnsatz &circuit) {
    QuantumState state = encode_input(x, circuit.spec);
    for (const GateGroup &group : circuit.groups) {
        apply_compiled_group(state, group, circuit);
    }
    return state;
}

} // namespace qcbp
