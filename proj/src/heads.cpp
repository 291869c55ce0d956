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
#include "qcbp/heads.hpp"

#include <algorithm>
#include <cmath>

#include "qcbp/error.hpp"

namespace qcbp {

namespace {

// dL/dp_j for L depending on p only through <Z_qubit>, with dL/d<Z> = weight.
void add_z_cotangent(std::vector<double> &dL_dp, QubitIndex qubit, double weight) {
    for (std::size_t j = 0; j < dL_dp.size(); ++j) {
        dL_dp[j] += bit_of(j, qubit) == 0 ? weight : -weight;
    }
}

int checked_label(double target) {
    if (target == 0.0) {
        return 0;
    }
    if (target == 1.0) {
        return 1;
    }
    throw DomainError("classification label must be 0 or 1");
}

} // namespace

void ClassificationHead::validate() const {
    if (qubit_1 == qubit_2) {
        throw DomainError("classification head needs two distinct qubits");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("softmax scale gamma must be positive");
    }
}

double regression_output(const QuantumState &state, const RegressionHead &head) {
    return head.output_scale * z_expectation(state, head.measured_qubit);
}

double mse_loss(double y_pred, double target) {
    const double diff = y_pred - target;
    return 0.5 * diff * diff;
}

ProbabilityCotangent regression_cotangent(const QuantumState &state, double target,
                                          const RegressionHead &head) {
    const double delta = regression_output(state, head) - target;
    ProbabilityCotangent cot{std::vector<double>(state.dim(), 0.0)};
    add_z_cotangent(cot.dL_dp, head.measured_qubit, head.output_scale * delta);
    return cot;
}

ClassProbabilities softmax_gamma(double z1, double z2, double gamma) {
    if (!(gamma > 0.0)) {
        throw DomainError("softmax scale gamma must be positive");
    }
    const double y1 = 1.0 / (1.0 + std::exp(-gamma * (z1 - z2)));
    return ClassProbabilities{y1, 1.0 - y1};
}

double cross_entropy_loss(double y1, int label) {
    if (label != 0 && label != 1) {
        throw DomainError("classification label must be 0 or 1");
    }
    const double y = std::clamp(y1, kLogClamp, 1.0 - kLogClamp);
    return label == 1 ? -std::log(y) : -std::log(1.0 - y);
}

ClassProbabilities class_probabilities(const QuantumState &state,
                                       const ClassificationHead &head) {
    head.validate();
    return softmax_gamma(z_expectation(state, head.qubit_1),
                         z_expectation(state, head.qubit_2), head.gamma);
}

ProbabilityCotangent classification_cotangent(const QuantumState &state, int label,
                                              const ClassificationHead &head) {
    if (label != 0 && label != 1) {
        throw DomainError("classification label must be 0 or 1");
    }
    const ClassProbabilities y = class_probabilities(state, head);
    // dL/d<Z_1> = gamma (y1 - d), dL/d<Z_2> = -gamma (y1 - d)
    const double delta = head.gamma * (y.y1 - static_cast<double>(label));
    ProbabilityCotangent cot{std::vector<double>(state.dim(), 0.0)};
    add_z_cotangent(cot.dL_dp, head.qubit_1, delta);
    add_z_cotangent(cot.dL_dp, head.qubit_2, -delta);
    return cot;
}

SampleEvaluation evaluate_sample(const QuantumState &state, double target,
                                 const Head &head) {
    if (const auto *reg = std::get_if<RegressionHead>(&head)) {
        const double y = regression_output(state, *reg);
        return SampleEvaluation{mse_loss(y, target), y,
                                regression_cotangent(state, target, *reg)};
    }
    const auto &cls = std::get<ClassificationHead>(head);
    const int label = checked_label(target);
    const ClassProbabilities y = class_probabilities(state, cls);
    return SampleEvaluation{cross_entropy_loss(y.y1, label), y.y1,
                            classification_cotangent(state, label, cls)};
}

SampleLoss sample_loss(const QuantumState &state, double target, const Head &head) {
    if (const auto *reg = std::get_if<RegressionHead>(&head)) {
        const double y = regression_output(state, *reg);
        return SampleLoss{mse_loss(y, target), y};
    }
    const auto &cls = std::get<ClassificationHead>(head);
    const ClassProbabilities y = class_probabilities(state, cls);
    return SampleLoss{cross_entropy_loss(y.y1, checked_label(target)), y.y1};
}

unsigned highest_measured_qubit(const Head &head) {
    if (const auto *reg = std::get_if<RegressionHead>(&head)) {
        return reg->measured_qubit.value;
    }
    const auto &cls = std::get<ClassificationHead>(head);
    return std::max(cls.qubit_1.value, cls.qubit_2.value);
}

} // namespace qcbp
