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
#include "qcbp/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcbp/error.hpp"

namespace qcbp {

GateMatrix2 operator*(const GateMatrix2 &lhs, const GateMatrix2 &rhs) {
    GateMatrix2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
        }
    }
    return out;
}

GateMatrix2 operator-(const GateMatrix2 &lhs, const GateMatrix2 &rhs) {
    GateMatrix2 out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.entries[i] = lhs.entries[i] - rhs.entries[i];
    }
    return out;
}

GateMatrix2 operator*(double scale, const GateMatrix2 &m) {
    GateMatrix2 out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.entries[i] = scale * m.entries[i];
    }
    return out;
}

GateMatrix2 adjoint(const GateMatrix2 &m) {
    return GateMatrix2{{std::conj(m(0, 0)), std::conj(m(1, 0)),
                        std::conj(m(0, 1)), std::conj(m(1, 1))}};
}

GateMatrix2 transpose(const GateMatrix2 &m) {
    return GateMatrix2{{m(0, 0), m(1, 0), m(0, 1), m(1, 1)}};
}

double max_abs_diff(const GateMatrix2 &lhs, const GateMatrix2 &rhs) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(lhs.entries[i] - rhs.entries[i]));
    }
    return worst;
}

namespace {

void require_finite(double theta, const char *gate) {
    if (!std::isfinite(theta)) {
        throw DomainError(std::string(gate) + ": rotation angle is not finite");
    }
}

} // namespace

GateMatrix2 ry(double theta) {
    require_finite(theta, "ry");
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return GateMatrix2{{Complex{c, 0.0}, Complex{-s, 0.0}, Complex{s, 0.0},
                        Complex{c, 0.0}}};
}

GateMatrix2 rz(double theta) {
    require_finite(theta, "rz");
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return GateMatrix2{{Complex{c, -s}, Complex{}, Complex{}, Complex{c, s}}};
}

GateMatrix2 d_ry(double theta) {
    const double c = 0.5 * std::cos(0.5 * theta);
    const double s = 0.5 * std::sin(0.5 * theta);
    return GateMatrix2{{Complex{-s, 0.0}, Complex{-c, 0.0}, Complex{c, 0.0},
                        Complex{-s, 0.0}}};
}

GateMatrix2 d_rz(double theta) {
    // d/dt e^{-it/2} = (-i/2) e^{-it/2} = (-s/2) - i (c/2)
    const double c = 0.5 * std::cos(0.5 * theta);
    const double s = 0.5 * std::sin(0.5 * theta);
    return GateMatrix2{{Complex{-s, -c}, Complex{}, Complex{}, Complex{-s, c}}};
}

GateMatrix2 rotation(RotationAxis axis, double theta) {
    return axis == RotationAxis::Y ? ry(theta) : rz(theta);
}

GateMatrix2 d_rotation(RotationAxis axis, double theta) {
    return axis == RotationAxis::Y ? d_ry(theta) : d_rz(theta);
}

} // namespace qcbp
