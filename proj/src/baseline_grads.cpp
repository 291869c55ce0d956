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
#include "qcbp/baseline_grads.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qcbp/error.hpp"
#include "qcbp/random.hpp"

namespace qcbp {

namespace {

double checked(double value, const char *what) {
    if (!std::isfinite(value)) {
        throw NumericError(std::string(what) + ": loss evaluation is not finite");
    }
    return value;
}

} // namespace

GradientVector finite_difference_grad(const LossFunction &f,
                                      const ParameterVector &theta, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("finite difference step must be positive");
    }
    GradientVector grad{std::vector<double>(theta.size(), 0.0)};
    ParameterVector probe = theta;
    for (std::size_t m = 0; m < theta.size(); ++m) {
        probe[m] = theta[m] + h;
        const double plus = checked(f(probe), "finite_difference_grad");
        probe[m] = theta[m] - h;
        const double minus = checked(f(probe), "finite_difference_grad");
        probe[m] = theta[m];
        grad.values[m] = (plus - minus) / (2.0 * h);
    }
    return grad;
}

void SpsaConfig::validate() const {
    if (!(a > 0.0) || !(c > 0.0)) {
        throw DomainError("SPSA gains a and c must be positive");
    }
    if (!(alpha > 0.0 && alpha <= 1.0) || !(gamma_exp > 0.0 && gamma_exp <= 1.0)) {
        throw DomainError("SPSA exponents must lie in (0, 1]");
    }
    if (!(A >= 0.0)) {
        throw DomainError("SPSA stability constant A must be non-negative");
    }
}

SpsaConfig SpsaConfig::defaults(std::size_t max_iterations, double first_step,
                                std::uint64_t seed) {
    SpsaConfig cfg;
    cfg.A = 0.1 * static_cast<double>(max_iterations);
    cfg.a = first_step * std::pow(1.0 + cfg.A, cfg.alpha);
    cfg.seed = seed;
    return cfg;
}

double spsa_perturbation(const SpsaConfig &cfg, std::size_t k) {
    return cfg.c / std::pow(static_cast<double>(k) + 1.0, cfg.gamma_exp);
}

double spsa_gain(const SpsaConfig &cfg, std::size_t k) {
    return cfg.a / std::pow(static_cast<double>(k) + 1.0 + cfg.A, cfg.alpha);
}

GradientVector spsa_grad(const LossFunction &f, const ParameterVector &theta,
                         std::size_t k, const SpsaConfig &cfg) {
    cfg.validate();
    Rng rng(derive_seed(cfg.seed, k));
    std::vector<int> delta(theta.size());
    for (int &d : delta) {
        d = rng.rademacher();
    }
    const double ck = spsa_perturbation(cfg, k);

    ParameterVector plus = theta;
    ParameterVector minus = theta;
    for (std::size_t m = 0; m < theta.size(); ++m) {
        plus[m] += ck * delta[m];
        minus[m] -= ck * delta[m];
    }
    const double diff = checked(f(plus), "spsa_grad") - checked(f(minus), "spsa_grad");

    GradientVector grad{std::vector<double>(theta.size(), 0.0)};
    for (std::size_t m = 0; m < theta.size(); ++m) {
        grad.values[m] = diff / (2.0 * ck * delta[m]);
    }
    return grad;
}

} // namespace qcbp
