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
/// Readout heads: they turn a final state into a model output, a loss and the
/// probability cotangent dL/dp that seeds the backward pass.
///
/// Regression:     y = 2 <Z_q>,  L = (y - f)^2 / 2
/// Classification: y1 = 1 / (1 + exp(-gamma (<Z_1> - <Z_2>))),  y2 = 1 - y1,
///                 L = -[d log y1 + (1 - d) log(1 - y1)]
///
/// Both cotangents are the exact derivatives of the losses above, so they
/// include the factor output_scale (regression) and gamma (classification).

#include <variant>

#include "qcbp/autodiff.hpp"
#include "qcbp/state.hpp"

namespace qcbp {

struct RegressionHead {
    QubitIndex measured_qubit{0};
    double output_scale{2.0};
};

struct ClassificationHead {
    QubitIndex qubit_1{0};
    QubitIndex qubit_2{1};
    double gamma{1.0};

    void validate() const;
};

using Head = std::variant<RegressionHead, ClassificationHead>;

/// Probabilities are clamped to [kLogClamp, 1 - kLogClamp] before the log.
inline constexpr double kLogClamp = 1e-12;

double regression_output(const QuantumState &state, const RegressionHead &head);
double mse_loss(double y_pred, double target);
ProbabilityCotangent regression_cotangent(const QuantumState &state, double target,
                                          const RegressionHead &head);

struct ClassProbabilities {
    double y1;
    double y2;
};

ClassProbabilities softmax_gamma(double z1, double z2, double gamma);
double cross_entropy_loss(double y1, int label);
ClassProbabilities class_probabilities(const QuantumState &state,
                                       const ClassificationHead &head);
ProbabilityCotangent classification_cotangent(const QuantumState &state, int label,
                                              const ClassificationHead &head);

/// Label 1 iff y1 > 0.5.
constexpr int predicted_label(double y1) { return y1 > 0.5 ? 1 : 0; }

/// Loss, model output (y for regression, y1 for classification) and
/// cotangent of one sample.
struct SampleEvaluation {
    double loss;
    double output;
    ProbabilityCotangent cotangent;
};

/// `target` is the regression target or the class label (0.0 / 1.0).
SampleEvaluation evaluate_sample(const QuantumState &state, double target,
                                 const Head &head);

/// Loss and output without the cotangent.
struct SampleLoss {
    double loss;
    double output;
};
SampleLoss sample_loss(const QuantumState &state, double target, const Head &head);

/// Highest qubit index the head reads.
unsigned highest_measured_qubit(const Head &head);

} // namespace qcbp
