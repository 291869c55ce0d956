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
/// Reverse-mode gradient of a probability-based loss through the complex
/// statevector.
///
/// For a loss L(p) with p_j = |c_j|^2, the seed cotangent over amplitudes is
/// a_j = dL/dp_j * conj(c_j). Walking the tape backwards, a parameter m whose
/// gate U_m maps s_in to s_out contributes
///
///     dL/dtheta_m = 2 Re sum_j a_j ((dU_m/dtheta_m) s_in)_j
///
/// with `a` the cotangent at the gate output (a plain bilinear product, no
/// conjugation), and the cotangent moves through each gate as a_in = U^T a_out.
/// The gates of one rotation sub-layer act on distinct qubits and commute, so
/// (dU_m) s_in is evaluated as (dU_m U_m^dagger) s_out on the stored sub-layer
/// output.

#include <vector>

#include "qcbp/circuit.hpp"
#include "qcbp/state.hpp"

namespace qcbp {

/// dL/dp_j for every basis index j.
struct ProbabilityCotangent {
    std::vector<double> dL_dp;
};

/// dL/dtheta in ParameterVector layout.
struct GradientVector {
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    bool operator==(const GradientVector &) const = default;
};

std::vector<Complex> seed_amplitude_cotangent(const QuantumState &final_state,
                                              const ProbabilityCotangent &dL_dp);

/// Per-parameter operators needed by the backward pass, evaluated once for a
/// parameter vector and reused across samples.
class GradientEngine {
  public:
    explicit GradientEngine(const CompiledAnsatz &circuit);

    [[nodiscard]] GradientVector backward(const ForwardTape &tape,
                                          const ProbabilityCotangent &dL_dp) const;

    [[nodiscard]] const AnsatzSpec &spec() const noexcept { return spec_; }

  private:
    AnsatzSpec spec_;
    ParameterVector theta_;
    std::vector<GateMatrix2> local_derivatives_; // dU U^dagger
    std::vector<GateMatrix2> transposes_;        // U^T
};

GradientVector backward(const ForwardTape &tape,
                        const ProbabilityCotangent &dL_dp,
                        const AnsatzSpec &spec);

} // namespace qcbp
