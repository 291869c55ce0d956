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
/// Gradient estimators used as baselines: central finite differences and SPSA.

#include <cstddef>
#include <cstdint>
#include <functional>

#include "qcbp/autodiff.hpp"
#include "qcbp/circuit.hpp"

namespace qcbp {

/// Deterministic map from parameters to a scalar loss.
using LossFunction = std::function<double(const ParameterVector &)>;

/// Step size for oracle comparisons against backprop.
inline constexpr double kOracleStep = 1e-5;
/// Step size when finite differences drive training.
inline constexpr double kTrainingStep = 1e-4;

/// grad[m] = (f(theta + h e_m) - f(theta - h e_m)) / 2h. Calls `f` exactly
/// 2 * theta.size() times.
GradientVector finite_difference_grad(const LossFunction &f,
                                      const ParameterVector &theta, double h);

/// Gain sequences of simultaneous perturbation stochastic approximation.
/// Perturbation size c_k = c / (k + 1)^gamma_exp; step gain
/// a_k = a / (k + 1 + A)^alpha.
struct SpsaConfig {
    double a{0.1};
    double c{0.1};
    double A{20.0};
    double alpha{0.602};
    double gamma_exp{0.101};
    std::uint64_t seed{0};

    void validate() const;

    /// Standard choices: A is a tenth of the iteration budget and `a` is set
    /// so that the first gain a_0 equals `first_step`.
    static SpsaConfig defaults(std::size_t max_iterations, double first_step,
                               std::uint64_t seed);
};

double spsa_perturbation(const SpsaConfig &cfg, std::size_t k);
double spsa_gain(const SpsaConfig &cfg, std::size_t k);

/// Two-evaluation SPSA gradient estimate at iteration k. The Rademacher
/// direction depends only on (cfg.seed, k).
GradientVector spsa_grad(const LossFunction &f, const ParameterVector &theta,
                         std::size_t k, const SpsaConfig &cfg);

} // namespace qcbp
