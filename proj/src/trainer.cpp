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
#include "qcbp/trainer.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <string>

#include "qcbp/error.hpp"
#include "qcbp/random.hpp"

namespace qcbp {

namespace {

using index_t = long long;

// Runs body(i) for i in [0, count) across threads and rethrows the first
// failure (lowest index) on the calling thread.
template <class Body> void parallel_samples(std::size_t count, Body &&body) {
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(static)
    for (index_t i = 0; i < static_cast<index_t>(count); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

Head with_gamma(Head head, double gamma) {
    if (auto *cls = std::get_if<ClassificationHead>(&head)) {
        cls->gamma = gamma;
    }
    return head;
}

void check_compatible(const Dataset &dataset, const AnsatzSpec &spec,
                      const Head &head) {
    spec.validate();
    if (dataset.samples.empty()) {
        throw DomainError("dataset is empty");
    }
    const bool is_regression = std::holds_alternative<RegressionHead>(head);
    if (is_regression != (dataset.task == Task::Regression)) {
        throw DomainError("head does not match the dataset task");
    }
    if (dataset.feature_dim() != spec.feature_dim) {
        throw DomainError("dataset has " + std::to_string(dataset.feature_dim()) +
                          " features, ansatz expects " +
                          std::to_string(spec.feature_dim));
    }
    if (highest_measured_qubit(head) >= spec.n_qubits) {
        throw DomainError("head reads a qubit the ansatz does not have");
    }
    if (const auto *cls = std::get_if<ClassificationHead>(&head)) {
        cls->validate();
    }
    for (const Sample &s : dataset.samples) {
        if (s.x.size() != spec.feature_dim) {
            throw DomainError("dataset mixes feature dimensions");
        }
        for (double v : s.x) {
            if (!(std::abs(v) <= 1.0)) {
                throw DomainError("dataset coordinate outside [-1, 1]");
            }
        }
    }
}

} // namespace

GradientMethod parse_gradient_method(std::string_view name) {
    if (name == "backprop") {
        return GradientMethod::Backprop;
    }
    if (name == "finite_difference") {
        return GradientMethod::FiniteDifference;
    }
    if (name == "spsa") {
        return GradientMethod::Spsa;
    }
    throw DomainError("unknown gradient method '" + std::string(name) + "'");
}

std::string_view to_string(GradientMethod method) {
    switch (method) {
    case GradientMethod::Backprop:
        return "backprop";
    case GradientMethod::FiniteDifference:
        return "finite_difference";
    case GradientMethod::Spsa:
        return "spsa";
    }
    return "unknown";
}

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw DomainError("learning_rate must be positive");
    }
    if (iterations < 1) {
        throw DomainError("iterations must be at least 1");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("gamma must be positive");
    }
    if (!(init_low < init_high)) {
        throw DomainError("init range must satisfy low < high");
    }
    if (!(fd_step > 0.0)) {
        throw DomainError("fd_step must be positive");
    }
    if (spsa) {
        spsa->validate();
    }
}

ParameterVector initial_parameters(const AnsatzSpec &spec, const TrainConfig &cfg) {
    Rng rng(cfg.init_seed);
    std::vector<double> theta(param_count(spec));
    for (double &t : theta) {
        t = rng.uniform(cfg.init_low, cfg.init_high);
    }
    return ParameterVector(std::move(theta));
}

BatchEvaluation evaluate_batch(const Dataset &dataset, const CompiledAnsatz &circuit,
                               const Head &head, bool with_gradient) {
    const std::size_t n = dataset.size();
    const std::size_t p = circuit.theta.size();
    std::vector<double> losses(n);
    BatchEvaluation out;
    out.outputs.resize(n);

    if (!with_gradient) {
        parallel_samples(n, [&](std::size_t i) {
            const Sample &s = dataset.samples[i];
            const SampleLoss r = sample_loss(simulate(s.x, circuit), s.target, head);
            losses[i] = r.loss;
            out.outputs[i] = r.output;
        });
    } else {
        const GradientEngine engine(circuit);
        std::vector<double> grads(n * p);
        parallel_samples(n, [&](std::size_t i) {
            const Sample &s = dataset.samples[i];
            const ForwardTape tape = forward(s.x, circuit);
            const SampleEvaluation r = evaluate_sample(tape.final_state(), s.target, head);
            const GradientVector g = engine.backward(tape, r.cotangent);
            losses[i] = r.loss;
            out.outputs[i] = r.output;
            std::copy(g.values.begin(), g.values.end(),
                      grads.begin() + static_cast<std::ptrdiff_t>(i * p));
        });
        GradientVector mean{std::vector<double>(p, 0.0)};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t m = 0; m < p; ++m) {
                mean.values[m] += grads[i * p + m];
            }
        }
        for (double &g : mean.values) {
            g /= static_cast<double>(n);
        }
        out.gradient = std::move(mean);
    }

    double total = 0.0;
    for (double l : losses) {
        total += l;
    }
    out.loss = total / static_cast<double>(n);
    return out;
}

double batch_loss(const Dataset &dataset, const CompiledAnsatz &circuit,
                  const Head &head) {
    return evaluate_batch(dataset, circuit, head, false).loss;
}

std::vector<double> predict(const std::vector<std::vector<double>> &inputs,
                            const AnsatzSpec &spec, const ParameterVector &theta,
                            const Head &head) {
    const CompiledAnsatz circuit(spec, theta);
    std::vector<double> out(inputs.size());
    parallel_samples(inputs.size(), [&](std::size_t i) {
        const QuantumState state = simulate(inputs[i], circuit);
        if (const auto *reg = std::get_if<RegressionHead>(&head)) {
            out[i] = regression_output(state, *reg);
        } else {
            out[i] = class_probabilities(state, std::get<ClassificationHead>(head)).y1;
        }
    });
    return out;
}

double r_squared(const std::vector<double> &predictions,
                 const std::vector<double> &targets) {
    if (predictions.size() != targets.size() || targets.empty()) {
        throw DomainError("r_squared needs equal, non-zero lengths");
    }
    double mean = 0.0;
    for (double t : targets) {
        mean += t;
    }
    mean /= static_cast<double>(targets.size());
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        ss_res += (targets[i] - predictions[i]) * (targets[i] - predictions[i]);
        ss_tot += (targets[i] - mean) * (targets[i] - mean);
    }
    if (ss_tot == 0.0) {
        throw DomainError("r_squared is undefined for constant targets");
    }
    return 1.0 - ss_res / ss_tot;
}

double accuracy(const std::vector<int> &predicted_labels,
                const std::vector<int> &true_labels) {
    if (predicted_labels.size() != true_labels.size()) {
        throw DomainError("accuracy needs label vectors of equal length");
    }
    if (true_labels.empty()) {
        throw DomainError("accuracy of an empty label set is undefined");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        hits += predicted_labels[i] == true_labels[i] ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(true_labels.size());
}

double batch_metric(const Dataset &dataset, const std::vector<double> &outputs,
                    const Head &head) {
    if (std::holds_alternative<RegressionHead>(head)) {
        std::vector<double> targets;
        targets.reserve(dataset.size());
        for (const Sample &s : dataset.samples) {
            targets.push_back(s.target);
        }
        return r_squared(outputs, targets);
    }
    std::vector<int> predicted;
    std::vector<int> truth;
    predicted.reserve(dataset.size());
    truth.reserve(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        predicted.push_back(predicted_label(outputs[i]));
        truth.push_back(dataset.samples[i].target == 1.0 ? 1 : 0);
    }
    return accuracy(predicted, truth);
}

TrainingSession::TrainingSession(const Dataset &dataset, const AnsatzSpec &spec,
                                 Head head, TrainConfig cfg)
    : dataset_(dataset), spec_(spec), head_(with_gamma(std::move(head), cfg.gamma)),
      cfg_(std::move(cfg)) {
    cfg_.validate();
    check_compatible(dataset_, spec_, head_);
    spsa_ = cfg_.spsa ? *cfg_.spsa
                      : SpsaConfig::defaults(cfg_.iterations, cfg_.learning_rate,
                                             cfg_.init_seed);
    theta_ = initial_parameters(spec_, cfg_);
}

LossFunction TrainingSession::loss_function() const {
    return [this](const ParameterVector &theta) {
        return batch_loss(dataset_, CompiledAnsatz(spec_, theta), head_);
    };
}

IterationStats TrainingSession::step() {
    const CompiledAnsatz circuit(spec_, theta_);
    const bool backprop = cfg_.method == GradientMethod::Backprop;
    BatchEvaluation batch = evaluate_batch(dataset_, circuit, head_, backprop);
    if (!std::isfinite(batch.loss)) {
        throw NumericError("loss became non-finite at iteration " +
                               std::to_string(iteration_),
                           iteration_);
    }
    const IterationStats stats{batch.loss, batch_metric(dataset_, batch.outputs, head_)};

    GradientVector grad;
    switch (cfg_.method) {
    case GradientMethod::Backprop:
        grad = std::move(*batch.gradient);
        break;
    case GradientMethod::FiniteDifference:
        grad = finite_difference_grad(loss_function(), theta_, cfg_.fd_step);
        break;
    case GradientMethod::Spsa:
        grad = spsa_grad(loss_function(), theta_, iteration_, spsa_);
        break;
    }
    for (std::size_t m = 0; m < theta_.size(); ++m) {
        if (!std::isfinite(grad.values[m])) {
            throw NumericError("gradient became non-finite at iteration " +
                                   std::to_string(iteration_),
                               iteration_);
        }
        theta_[m] -= cfg_.learning_rate * grad.values[m];
    }
    ++iteration_;
    return stats;
}

IterationStats TrainingSession::evaluate() const {
    const BatchEvaluation batch =
        evaluate_batch(dataset_, CompiledAnsatz(spec_, theta_), head_, false);
    return IterationStats{batch.loss, batch_metric(dataset_, batch.outputs, head_)};
}

TrainResult train(const Dataset &dataset, const AnsatzSpec &spec, const Head &head,
                  const TrainConfig &cfg) {
    const auto start = std::chrono::steady_clock::now();
    TrainingSession session(dataset, spec, head, cfg);
    TrainResult result;
    result.loss_history.reserve(cfg.iterations);
    result.metric_history.reserve(cfg.iterations);
    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        const IterationStats stats = session.step();
        result.loss_history.push_back(stats.loss);
        result.metric_history.push_back(stats.metric);
    }
    const IterationStats last = session.evaluate();
    if (!std::isfinite(last.loss)) {
        throw NumericError("final loss is non-finite", cfg.iterations);
    }
    result.final_theta = session.theta();
    result.final_loss = last.loss;
    result.final_metric = last.metric;
    result.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace qcbp
