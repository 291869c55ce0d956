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
/// Full-batch gradient descent over any of the gradient methods.

#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "qcbp/autodiff.hpp"
#include "qcbp/baseline_grads.hpp"
#include "qcbp/circuit.hpp"
#include "qcbp/data.hpp"
#include "qcbp/heads.hpp"

namespace qcbp {

enum class GradientMethod { Backprop, FiniteDifference, Spsa };

GradientMethod parse_gradient_method(std::string_view name);
std::string_view to_string(GradientMethod method);

struct TrainConfig {
    double learning_rate{0.3};
    std::size_t iterations{500};
    /// Softmax scale; replaces the gamma of a classification head.
    double gamma{1.0};
    std::uint64_t init_seed{0};
    double init_low{0.0};
    double init_high{2.0 * std::numbers::pi};
    GradientMethod method{GradientMethod::Backprop};
    double fd_step{kTrainingStep};
    /// SPSA settings; SpsaConfig::defaults(iterations, learning_rate,
    /// init_seed) when unset.
    std::optional<SpsaConfig> spsa;

    void validate() const;
};

/// theta_0 ~ U[init_low, init_high) drawn from init_seed.
ParameterVector initial_parameters(const AnsatzSpec &spec, const TrainConfig &cfg);

/// Mean loss, per-sample outputs and (optionally) the mean gradient of one
/// full batch.
struct BatchEvaluation {
    double loss{0.0};
    std::vector<double> outputs;
    std::optional<GradientVector> gradient;
};

/// Forward (and backward, when requested) over every sample. Per-sample work
/// may run on several threads; the reduction is a fixed-order sum, so the
/// result is identical for any thread count.
BatchEvaluation evaluate_batch(const Dataset &dataset, const CompiledAnsatz &circuit,
                               const Head &head, bool with_gradient);

/// Mean loss only, through the tape-free simulator.
double batch_loss(const Dataset &dataset, const CompiledAnsatz &circuit,
                  const Head &head);

/// Model outputs (2<Z> or y1) for arbitrary inputs.
std::vector<double> predict(const std::vector<std::vector<double>> &inputs,
                            const AnsatzSpec &spec, const ParameterVector &theta,
                            const Head &head);

double r_squared(const std::vector<double> &predictions,
                 const std::vector<double> &targets);
double accuracy(const std::vector<int> &predicted_labels,
                const std::vector<int> &true_labels);

/// R^2 for regression heads, accuracy for classification heads.
double batch_metric(const Dataset &dataset, const std::vector<double> &outputs,
                    const Head &head);

struct IterationStats {
    double loss;
    double metric;
};

/// Training state advanced one gradient-descent step at a time.
class TrainingSession {
  public:
    /// `dataset` is held by reference and must outlive the session.
    TrainingSession(const Dataset &dataset, const AnsatzSpec &spec, Head head,
                    TrainConfig cfg);

    /// Evaluates the batch at the current parameters, then applies
    /// theta <- theta - lr * grad. Returns the pre-update loss and metric.
    IterationStats step();

    /// Loss and metric at the current parameters, no update.
    [[nodiscard]] IterationStats evaluate() const;

    [[nodiscard]] const ParameterVector &theta() const noexcept { return theta_; }
    [[nodiscard]] std::size_t iteration() const noexcept { return iteration_; }
    [[nodiscard]] const Head &head() const noexcept { return head_; }

  private:
    [[nodiscard]] LossFunction loss_function() const;

    const Dataset &dataset_;
    AnsatzSpec spec_;
    Head head_;
    TrainConfig cfg_;
    SpsaConfig spsa_;
    ParameterVector theta_;
    std::size_t iteration_{0};
};

struct TrainResult {
    ParameterVector final_theta;
    std::vector<double> loss_history;
    std::vector<double> metric_history;
    /// Loss and metric evaluated at final_theta.
    double final_loss{0.0};
    double final_metric{0.0};
    double wall_time_seconds{0.0};
};

TrainResult train(const Dataset &dataset, const AnsatzSpec &spec, const Head &head,
                  const TrainConfig &cfg);

} // namespace qcbp
