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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qcbp/autodiff.hpp"
#include "qcbp/bench.hpp"
#include "qcbp/error.hpp"
#include "qcbp/heads.hpp"
#include "qcbp/random.hpp"

using namespace qcbp;
using Catch::Approx;

namespace {

constexpr double pi = std::numbers::pi;

// Loss evaluated entirely through the dense oracle.
double oracle_loss(const std::vector<double> &x, const std::vector<double> &theta,
                   unsigned n, unsigned depth, const Head &head, double target) {
    const auto psi = oracle::circuit_state(x, theta, n, depth);
    if (const auto *r = std::get_if<RegressionHead>(&head)) {
        const double y = 2.0 * oracle::z_expectation(psi, r->measured_qubit.value);
        return 0.5 * (y - target) * (y - target);
    }
    const auto &c = std::get<ClassificationHead>(head);
    const double z1 = oracle::z_expectation(psi, c.qubit_1.value);
    const double z2 = oracle::z_expectation(psi, c.qubit_2.value);
    const double e1 = std::exp(c.gamma * z1), e2 = std::exp(c.gamma * z2);
    const double y1 = std::clamp(e1 / (e1 + e2), 1e-12, 1.0 - 1e-12);
    return target > 0.5 ? -std::log(y1) : -std::log(1.0 - y1);
}

struct Instance {
    AnsatzSpec spec;
    ParameterVector theta;
    std::vector<double> x;
    Head head;
    double target;
};

Instance random_instance(Rng &rng, unsigned n, unsigned depth, bool classify) {
    Instance inst{{n, depth, classify ? 2U : 1U}, {}, {}, RegressionHead{}, 0.0};
    inst.theta.values.resize(param_count(inst.spec));
    for (double &v : inst.theta.values) {
        v = rng.uniform(0.0, 2.0 * pi);
    }
    inst.x.resize(inst.spec.feature_dim);
    for (double &v : inst.x) {
        v = rng.uniform(-1.0, 1.0);
    }
    if (classify) {
        inst.head = ClassificationHead{QubitIndex{0}, QubitIndex{1}, rng.uniform(0.5, 5.0)};
        inst.target = rng.rademacher() > 0 ? 1.0 : 0.0;
    } else {
        inst.target = rng.uniform(-2.0, 2.0);
    }
    return inst;
}

GradientVector backprop(const Instance &inst) {
    const ForwardTape tape = forward(inst.x, inst.theta, inst.spec);
    const SampleEvaluation eval = evaluate_sample(tape.final_state(), inst.target, inst.head);
    return backward(tape, eval.cotangent, inst.spec);
}

} // namespace

TEST_CASE("Amplitude cotangent seed", "[autodiff]") {
    const auto zero = seed_amplitude_cotangent(QuantumState(2), {{0, 0, 0, 0}});
    for (const auto &a : zero) {
        CHECK(a == Complex(0.0));
    }

    const auto a = seed_amplitude_cotangent(QuantumState(1), {{1.0, 0.0}});
    CHECK(a[0] == Complex(1.0));
    CHECK(a[1] == Complex(0.0));

    const double r = 1.0 / std::sqrt(2.0);
    const auto b = seed_amplitude_cotangent(
        QuantumState::from_amplitudes({r, Complex(0, r)}), {{0.0, 1.0}});
    CHECK(b[0] == Complex(0.0));
    CHECK(b[1] == Complex(0.0, -r));

    CHECK_THROWS_AS(seed_amplitude_cotangent(QuantumState(1), {{1.0}}), DomainError);
}

TEST_CASE("Analytic single-rotation gradient", "[autodiff]") {
    const AnsatzSpec spec{1, 0, 1};
    const std::vector<double> x{0.0};
    const ForwardTape tape = forward(x, ParameterVector({pi / 3, 0.0}), spec);
    const GradientVector g = backward(tape, {{1.0, -1.0}}, spec);
    CHECK(g[0] == Approx(-0.8660254037844386).margin(1e-9));
    CHECK(g[1] == Approx(0.0).margin(1e-12));

    const GradientVector z = backward(tape, {{0.0, 0.0}}, spec);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
}

TEST_CASE("Backprop matches finite differences of the dense oracle", "[autodiff][oracle]") {
    Rng rng(8675309);
    int instances = 0;
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned depth = 0; depth <= 3; ++depth) {
            for (bool classify : {false, true}) {
                if (classify && n < 2) {
                    continue;
                }
                const Instance inst = random_instance(rng, n, depth, classify);
                const GradientVector bp = backprop(inst);
                const auto fd = oracle::central_difference(
                    [&](const std::vector<double> &th) {
                        return oracle_loss(inst.x, th, n, depth, inst.head, inst.target);
                    },
                    inst.theta.values, 1e-5);
                REQUIRE(bp.size() == fd.size());
                for (std::size_t m = 0; m < fd.size(); ++m) {
                    INFO("n=" << n << " l=" << depth << " classify=" << classify
                              << " m=" << m);
                    REQUIRE(std::abs(bp[m] - fd[m]) <=
                            std::max(1e-7, 1e-5 * std::abs(fd[m])));
                }
                ++instances;
            }
        }
    }
    CHECK(instances == 28);
}

TEST_CASE("Backward is linear in the cotangent", "[autodiff]") {
    Rng rng(12);
    const Instance inst = random_instance(rng, 3, 2, false);
    const ForwardTape tape = forward(inst.x, inst.theta, inst.spec);
    ProbabilityCotangent g1{std::vector<double>(8)}, g2{std::vector<double>(8)},
        mix{std::vector<double>(8)};
    const double alpha = 0.7, beta = -1.9;
    for (std::size_t j = 0; j < 8; ++j) {
        g1.dL_dp[j] = rng.normal();
        g2.dL_dp[j] = rng.normal();
        mix.dL_dp[j] = alpha * g1.dL_dp[j] + beta * g2.dL_dp[j];
    }
    const GradientVector a = backward(tape, g1, inst.spec);
    const GradientVector b = backward(tape, g2, inst.spec);
    const GradientVector c = backward(tape, mix, inst.spec);
    for (std::size_t m = 0; m < c.size(); ++m) {
        REQUIRE(std::abs(c[m] - (alpha * a[m] + beta * b[m])) < 1e-10);
        REQUIRE(std::isfinite(c[m]));
    }
}

TEST_CASE("Gradient engine rejects mismatched tapes", "[autodiff]") {
    Rng rng(4);
    const Instance inst = random_instance(rng, 2, 1, false);
    const CompiledAnsatz compiled(inst.spec, inst.theta);
    const GradientEngine engine(compiled);
    const ForwardTape tape = forward(inst.x, inst.theta, inst.spec);
    CHECK_NOTHROW(engine.backward(tape, {std::vector<double>(4, 1.0)}));
    CHECK_THROWS_AS(engine.backward(tape, {std::vector<double>(3, 1.0)}), DomainError);

    ParameterVector other = inst.theta;
    other[0] += 0.1;
    const ForwardTape shifted = forward(inst.x, other, inst.spec);
    CHECK_THROWS_AS(engine.backward(shifted, {std::vector<double>(4, 1.0)}), DomainError);
}

TEST_CASE("One backward pass costs at most three forward passes", "[autodiff][cost]") {
    Rng rng(77);
    for (unsigned depth : {5U, 10U, 20U}) {
        const Instance inst = random_instance(rng, 4, depth, true);
        const CompiledAnsatz compiled(inst.spec, inst.theta);
        const GradientEngine engine(compiled);
        const ForwardTape tape = forward(inst.x, compiled);
        const SampleEvaluation eval =
            evaluate_sample(tape.final_state(), inst.target, inst.head);

        constexpr int reps = 2000;
        double sink = 0.0;
        const double t_forward = median_seconds(
            [&] {
                for (int r = 0; r < reps; ++r) {
                    sink += forward(inst.x, compiled).final_state()[0].real();
                }
            },
            5);
        const double t_backward = median_seconds(
            [&] {
                for (int r = 0; r < reps; ++r) {
                    sink += engine.backward(tape, eval.cotangent)[0];
                }
            },
            5);
        INFO("depth " << depth << " forward " << t_forward << " backward " << t_backward
                      << " sink " << sink);
        CHECK(t_backward <= 3.0 * t_forward);
    }
}
