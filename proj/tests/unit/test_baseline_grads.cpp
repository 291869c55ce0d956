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
#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qcbp/autodiff.hpp"
#include "qcbp/baseline_grads.hpp"
#include "qcbp/error.hpp"
#include "qcbp/heads.hpp"
#include "qcbp/random.hpp"

using namespace qcbp;
using Catch::Approx;

TEST_CASE("Finite differences on closed-form losses", "[baseline]") {
    const LossFunction constant = [](const ParameterVector &) { return 3.0; };
    for (double g : finite_difference_grad(constant, ParameterVector({1.0, 2.0, 3.0}), 1e-4).values) {
        CHECK(g == 0.0);
    }

    const LossFunction quadratic = [](const ParameterVector &t) {
        double s = 0.0;
        for (double v : t.values) {
            s += v * v;
        }
        return s;
    };
    const GradientVector q = finite_difference_grad(quadratic, ParameterVector({1.0, 2.0}), 1e-5);
    CHECK(q[0] == Approx(2.0).margin(1e-8));
    CHECK(q[1] == Approx(4.0).margin(1e-8));

    const AnsatzSpec spec{1, 0, 1};
    const std::vector<double> x{0.0};
    const LossFunction z = [&](const ParameterVector &t) {
        return z_expectation(simulate(x, t, spec), QubitIndex{0});
    };
    const GradientVector g =
        finite_difference_grad(z, ParameterVector({std::numbers::pi / 2, 0.0}), kOracleStep);
    CHECK(g[0] == Approx(-1.0).margin(1e-9));

    CHECK_THROWS_AS(finite_difference_grad(quadratic, ParameterVector({1.0}), 0.0), DomainError);
    const LossFunction broken = [](const ParameterVector &) { return std::nan(""); };
    CHECK_THROWS_AS(finite_difference_grad(broken, ParameterVector({1.0}), 1e-4), NumericError);
}

TEST_CASE("Evaluation counts", "[baseline]") {
    int calls = 0;
    const LossFunction counting = [&](const ParameterVector &t) {
        ++calls;
        return t[0];
    };
    const ParameterVector theta(std::vector<double>(7, 0.5));
    finite_difference_grad(counting, theta, 1e-4);
    CHECK(calls == 14);
    calls = 0;
    spsa_grad(counting, theta, 3, SpsaConfig{});
    CHECK(calls == 2);
}

TEST_CASE("SPSA perturbation schedule", "[baseline]") {
    const SpsaConfig cfg{};
    double previous = spsa_perturbation(cfg, 0);
    CHECK(previous == cfg.c);
    for (std::size_t k = 1; k < 1000; k += 7) {
        const double ck = spsa_perturbation(cfg, k);
        REQUIRE(ck < previous);
        previous = ck;
    }
    CHECK(spsa_perturbation(cfg, 99) == Approx(0.1 / std::pow(100.0, 0.101)));

    const SpsaConfig d = SpsaConfig::defaults(200, 0.1, 5);
    CHECK(d.A == Approx(20.0));
    CHECK(spsa_gain(d, 0) == Approx(0.1));
    CHECK(d.alpha == 0.602);
    CHECK(d.gamma_exp == 0.101);

    SpsaConfig bad{};
    bad.c = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = SpsaConfig{};
    bad.alpha = 1.5;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("SPSA is unbiased on linear and quadratic losses", "[baseline][statistical]") {
    const std::vector<double> v{2.0, -2.5, 3.0, 1.5};
    const LossFunction linear = [&](const ParameterVector &t) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += v[i] * t[i];
        }
        return s;
    };
    const LossFunction quadratic = [&](const ParameterVector &t) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i + 1.0) * t[i] * t[i];
        }
        return s;
    };
    const ParameterVector theta({0.3, -0.2, 0.7, 1.1});
    constexpr int draws = 10000;
    std::vector<double> mean_lin(4, 0.0), mean_quad(4, 0.0);
    for (int k = 0; k < draws; ++k) {
        SpsaConfig cfg{};
        cfg.seed = 1234;
        const GradientVector gl = spsa_grad(linear, theta, static_cast<std::size_t>(k), cfg);
        const GradientVector gq = spsa_grad(quadratic, theta, static_cast<std::size_t>(k), cfg);
        for (std::size_t m = 0; m < 4; ++m) {
            mean_lin[m] += gl[m] / draws;
            mean_quad[m] += gq[m] / draws;
        }
    }
    for (std::size_t m = 0; m < 4; ++m) {
        CHECK(mean_lin[m] == Approx(v[m]).epsilon(0.05));
        const double truth = 2.0 * (m + 1.0) * theta[m];
        CHECK(mean_quad[m] == Approx(truth).epsilon(0.05));
    }

    const LossFunction constant = [](const ParameterVector &) { return 1.0; };
    for (double g : spsa_grad(constant, theta, 0, SpsaConfig{}).values) {
        CHECK(g == 0.0);
    }
}

TEST_CASE("Finite differences agree with backprop on circuit losses", "[baseline]") {
    Rng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const AnsatzSpec spec{3, 2, 1};
        ParameterVector theta(std::vector<double>(param_count(spec)));
        for (double &v : theta.values) {
            v = rng.uniform(0.0, 6.28);
        }
        const std::vector<double> x{rng.uniform(-1, 1)};
        const double target = rng.uniform(-1, 1);
        const ForwardTape tape = forward(x, theta, spec);
        const SampleEvaluation e = evaluate_sample(tape.final_state(), target, RegressionHead{});
        const GradientVector bp = backward(tape, e.cotangent, spec);
        const GradientVector fd = finite_difference_grad(
            [&](const ParameterVector &t) {
                return sample_loss(simulate(x, t, spec), target, RegressionHead{}).loss;
            },
            theta, kOracleStep);
        for (std::size_t m = 0; m < bp.size(); ++m) {
            REQUIRE(std::abs(bp[m] - fd[m]) <= std::max(1e-7, 1e-5 * std::abs(fd[m])));
        }
    }
}
