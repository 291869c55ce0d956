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
#include "qcbp/autodiff.hpp"

#include <cmath>
#include <string>

#include "qcbp/error.hpp"
#include "qcbp/kernels.hpp"

namespace qcbp {

std::vector<Complex> seed_amplitude_cotangent(const QuantumState &final_state,
                                              const ProbabilityCotangent &dL_dp) {
    if (dL_dp.dL_dp.size() != final_state.dim()) {
        throw DomainError("cotangent length " + std::to_string(dL_dp.dL_dp.size()) +
                          " does not match state dimension " +
                          std::to_string(final_state.dim()));
    }
    std::vector<Complex> seed(final_state.dim());
    kernels::parallel::weighted_conj(dL_dp.dL_dp, final_state.amplitudes(), seed);
    return seed;
}

GradientEngine::GradientEngine(const CompiledAnsatz &circuit)
    : spec_(circuit.spec), theta_(circuit.theta) {
    local_derivatives_.resize(theta_.size());
    transposes_.resize(theta_.size());
    for (unsigned layer = 0; layer <= spec_.depth; ++layer) {
        for (unsigned q = 0; q < spec_.n_qubits; ++q) {
            for (RotationAxis axis : {RotationAxis::Y, RotationAxis::Z}) {
                const std::size_t m = param_index(spec_, layer, q, axis);
                const GateMatrix2 &u = circuit.gates[m];
                local_derivatives_[m] = d_rotation(axis, theta_[m]) * adjoint(u);
                transposes_[m] = transpose(u);
            }
        }
    }
}

GradientVector GradientEngine::backward(const ForwardTape &tape,
                                        const ProbabilityCotangent &dL_dp) const {
    if (!(tape.spec == spec_) || !(tape.theta == theta_)) {
        throw DomainError("tape was recorded for a different circuit");
    }
    if (tape.post_group_states.size() != tape.groups.size() ||
        tape.groups.empty()) {
        throw DomainError("malformed tape");
    }

    std::vector<Complex> cot = seed_amplitude_cotangent(tape.final_state(), dL_dp);
    GradientVector grad{std::vector<double>(theta_.size(), 0.0)};

    for (std::size_t g = tape.groups.size(); g-- > 0;) {
        const GateGroup &group = tape.groups[g];
        if (group.kind == GateGroup::Kind::Entangler) {
            const unsigned n = spec_.n_qubits;
            for (unsigned j = 0; j < n && n >= 2; ++j) {
                kernels::parallel::apply_cz(cot, j, (j + 1) % n);
            }
            continue;
        }
        const std::span<const Complex> out = tape.post_group_states[g].amplitudes();
        for (unsigned q = 0; q < spec_.n_qubits; ++q) {
            const std::size_t m = param_index(spec_, group.layer, q, group.axis);
            grad.values[m] =
                2.0 * kernels::parallel::bilinear_re(cot, out, local_derivatives_[m], q);
        }
        for (unsigned q = 0; q < spec_.n_qubits; ++q) {
            const std::size_t m = param_index(spec_, group.layer, q, group.axis);
            kernels::parallel::apply_1q(cot, transposes_[m], q);
        }
    }
    return grad;
}

GradientVector backward(const ForwardTape &tape,
                        const ProbabilityCotangent &dL_dp,
                        const AnsatzSpec &spec) {
    if (!(tape.spec == spec)) {
        throw DomainError("tape was recorded for a different ansatz");
    }
    return GradientEngine(CompiledAnsatz(spec, tape.theta)).backward(tape, dL_dp);
}

} // namespace qcbp
