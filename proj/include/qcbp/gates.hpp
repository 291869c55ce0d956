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
/// Rotation gates and their analytic parameter derivatives.
///
/// Conventions: R_Y(t) = exp(-i t Y / 2) = [[cos(t/2), -sin(t/2)],
///                                          [sin(t/2),  cos(t/2)]]
///              R_Z(t) = exp(-i t Z / 2) = diag(e^{-it/2}, e^{+it/2})
/// A local unit U(t_y, t_z) = R_Z(t_z) R_Y(t_y), i.e. R_Y acts first.

#include "qcbp/gate_matrix.hpp"
#include "qcbp/state.hpp"

namespace qcbp {

enum class RotationAxis { Y, Z };

GateMatrix2 ry(double theta);
GateMatrix2 rz(double theta);
GateMatrix2 d_ry(double theta);
GateMatrix2 d_rz(double theta);

GateMatrix2 rotation(RotationAxis axis, double theta);
GateMatrix2 d_rotation(RotationAxis axis, double theta);

/// Controlled-Z between two qubits. Symmetric, real and diagonal, so it is
/// its own transpose and inverse.
struct CzGate {
    QubitIndex control;
    QubitIndex target;
};

} // namespace qcbp
